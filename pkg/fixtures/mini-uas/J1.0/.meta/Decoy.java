package decoy;

public class Decoy {
    private int hidden;

    public void ignoreMe() {
    }
}
