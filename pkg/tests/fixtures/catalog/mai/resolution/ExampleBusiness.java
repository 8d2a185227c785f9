package mai.resolution;

class ExampleBusiness extends GenericBusinessImpl {

    private IDAOexampleDAO exampleDAO;

    @Inject
    public void setExampleDAO(ExampleDAO exampleDAO) {
        this.exampleDAO = exampleDAO;
    }

    @Override
    protected IDAO getGenericDAO() {
        return this.exampleDAO;
    }

}
