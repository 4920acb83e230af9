class OperatorRuns {
    boolean armed;
    boolean live;

    boolean admit(boolean a, boolean b, boolean c, boolean d) {
        return armed && a && b || c || d && live;
    }

    boolean reject(boolean a, boolean b) {
        return !(a && b) || (armed || live) && a;
    }
}
