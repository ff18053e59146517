package uas.model;

public class Student {
    private String id;
    private String firstName;
    private String lastName;
    private String email;
    private String phone;
    private String street, city, postcode;
    private String country;
    private String birthDate;
    private int enrollmentYear;
    private boolean active;

    public Student(String id) {
        this.id = id;
        this.active = false;
    }

    public boolean login(String user, String pass) {
        if (user == null) {
            return false;
        }
        return active;
    }

    public void register(Course course) {
        this.active = true;
    }

    public String mailbox() {
        return email;
    }
}
