class PerfectCohesion {
    int x;

    void raise() {
        x = x + 1;
    }

    int read() {
        return x;
    }
}
