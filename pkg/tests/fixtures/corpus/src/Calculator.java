package fixture.corpus;

class Calculator {
    double memory;

    double add(double value) {
        memory += value;
        return memory;
    }

    double multiply(double value) {
        memory *= value;
        return memory;
    }

    void clear() {
        memory = 0.0;
    }
}
