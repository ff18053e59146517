package broken;

public class Good {
    private int a;
    private int b;

    public void one() {
    }

    public void two() {
    }
}
