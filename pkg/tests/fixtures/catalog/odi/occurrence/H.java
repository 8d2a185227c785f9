package odi.occurrence;

public class H {
    @Inject
    private Parser parser;

    public void setParser(Object parser) {
        this.parser = parser;
    }

    public void execute(String file) {
        parser.parse(file);
    }
}
