package iij.occurrence;

public class A {
    @Inject
    private IExampleInterface0 example0;
    @Inject
    private IExampleInterface1 example1;

    public A() {
        example0.doSomething();
    }

    public void foo() { /* omitted code */ }

    public void bar() {
        example1.doSomething();
        /* omitted code */
    }
}
