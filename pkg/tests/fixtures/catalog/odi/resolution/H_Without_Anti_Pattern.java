package odi.resolution;

public class H_Without_Anti_Pattern {
    @Inject
    private Parser parser;

    public void execute(String file) {
        parser.parse(file);
    }
}
