package broken;

public class Broken {
    private int x;

    public void ok() {
        x = 1;
    // the closing braces are deliberately missing
