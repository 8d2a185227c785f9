package oracle;

public class ComplexityCases {

    void empty() {
    }

    void singleIf() {
        if (a) { x(); }
    }

    void ifWithAnd() {
        if (a && b) { x(); }
    }

    void loopChain() {
        for (int i = 0; i < 10; i++) {
            while (ready) { x(); }
        }
    }

    void doAndTernary() {
        do {
            y = a ? 1 : 2;
        } while (a || b);
    }

    int switchCases(int k) {
        switch (k) {
            case 1: return 1;
            case 2: return 2;
            case 3: return 3;
            default: return 0;
        }
    }

    void tryCatches() {
        try {
            x();
        } catch (IOException e) {
            log(e);
        } catch (RuntimeException e) {
            log(e);
        } finally {
            close();
        }
    }

    void forEachNested(List<String> items) {
        for (String s : items) {
            if (s.isEmpty()) { continue; }
        }
    }

    void lambdaContrib(List<String> list) {
        list.forEach(item -> {
            if (item != null) { use(item); }
        });
        if (guard) { x(); }
    }

    int kitchenSink() {
        if (a || b && c) {
            for (;;) { break; }
        } else {
            y = a ? (b ? 1 : 2) : 3;
        }
        return y;
    }
}
