package cci.occurrence;

public class B {
    @Inject
    private ConcreteClassExample example;

    private void foo() {
        example.doSomething();
        // code omitted for brevity
    }
}
