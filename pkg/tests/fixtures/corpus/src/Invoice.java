package fixture.corpus;

class Invoice {
    int total;
    boolean sealed;

    class Line {
        int amount;
    }

    void charge(int amount) {
        if (!sealed) {
            total += amount;
        }
    }

    void seal() {
        sealed = true;
    }

    int total() {
        return total;
    }
}
