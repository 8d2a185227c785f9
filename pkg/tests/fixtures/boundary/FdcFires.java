package boundary;

public class FdcFires {
    @Inject private IDep1 dep1;
    @Inject private IDep2 dep2;
    @Inject private IDep3 dep3;
    @Inject private IDep4 dep4;
    @Inject private IDep5 dep5;

    void method1() {
        if (flag1) { touch(); }
        if (flag2) { touch(); }
        if (flag3) { touch(); }
        if (flag4) { touch(); }
    }

    void method2() {
        if (flag1) { touch(); }
        if (flag2) { touch(); }
        if (flag3) { touch(); }
        if (flag4) { touch(); }
        if (flag5) { touch(); }
        if (flag6) { touch(); }
        if (flag7) { touch(); }
        if (flag8) { touch(); }
    }

    void method3() {
        if (flag1) { touch(); }
        if (flag2) { touch(); }
        if (flag3) { touch(); }
        if (flag4) { touch(); }
        if (flag5) { touch(); }
        if (flag6) { touch(); }
        if (flag7) { touch(); }
        if (flag8) { touch(); }
        if (flag9) { touch(); }
        if (flag10) { touch(); }
        if (flag11) { touch(); }
        if (flag12) { touch(); }
    }

    void method4() {
        if (flag1) { touch(); }
        if (flag2) { touch(); }
        if (flag3) { touch(); }
        if (flag4) { touch(); }
        if (flag5) { touch(); }
        if (flag6) { touch(); }
        if (flag7) { touch(); }
        if (flag8) { touch(); }
        if (flag9) { touch(); }
        if (flag10) { touch(); }
        if (flag11) { touch(); }
    }

    void method5() {
        if (flag1) { touch(); }
        if (flag2) { touch(); }
        if (flag3) { touch(); }
        if (flag4) { touch(); }
        if (flag5) { touch(); }
        if (flag6) { touch(); }
        if (flag7) { touch(); }
    }
}
