package boundary;

public class CpmAtEight {
    @Bean
    public IThing buildThing() {
        if (flag1) { step1(); }
        if (flag2) { step2(); }
        if (flag3) { step3(); }
        if (flag4) { step4(); }
        if (flag5) { step5(); }
        if (flag6) { step6(); }
        if (flag7) { step7(); }
        return thing;
    }
}
