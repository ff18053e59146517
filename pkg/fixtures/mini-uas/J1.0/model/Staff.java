package uas.model;

public class Staff {
    private String id;
    private String name;
    private String email;
    private String department;
    private String room;
    private String phone;
    private int salaryGrade;
    private int hireYear;
    private String officeHours;
    private String supervisor;
    private boolean active;
    private String badge;

    public Staff(String id) {
        this.id = id;
    }

    public boolean login(String user, String pass) {
        return active;
    }

    public void assignCourse(Course course) {
        this.active = true;
    }
}
