package fco.occurrence;

public class J {
    @Autowired
    private Parser parser;
    @Autowired
    private IDataSource dataSource;

    public void execute(List<String> files) {
        for (String file : files) {
            Object parsedObject = parser.parse(file);
            dataSource.insert(key, parsedObject);
        }
    }
}
