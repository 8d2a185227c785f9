package sdp.resolution;

public class ProjectConfigBeans {
    @Bean
    public IDataSource provideDataSource() {
        // logic for creating an instance of IDataSource
    }
}
