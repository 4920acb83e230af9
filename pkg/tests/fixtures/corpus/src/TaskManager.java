package fixture.corpus;

class TaskManager {
    int pending;
    int done;

    void enqueue(int count) {
        if (count > 0) {
            pending += count;
        }
    }

    void finish(int count) {
        pending -= count;
        done += count;
    }

    int backlog() {
        return pending;
    }
}
