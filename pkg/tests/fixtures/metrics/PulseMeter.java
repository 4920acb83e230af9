class PulseMeter {
    int beats;

    void throb(int rounds) {
        do {
            beats++;
            rounds--;
        } while (rounds > 0);
    }

    int gauge(int raw) {
        return raw > 100 ? 2 : raw > 10 ? 1 : 0;
    }
}
