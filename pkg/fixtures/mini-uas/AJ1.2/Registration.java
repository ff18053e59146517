package uas;

import uas.model.Student;

public class Registration {
    private Student student;
    private Course course;
    private String status;
    private String submittedOn;
    private String verifiedOn;
    private int receiptNo;
    private double fee;
    private double discount;
    private boolean paid;
    private String channel;
    private String remarks;

    public void submit() {
        this.status = "SUBMITTED";
    }

    public boolean verify() {
        return paid;
    }

    public void print() {
        this.remarks = status;
    }

    public static class Receipt {
        private int number;
        private double amount;
        private String issuedOn;
        private String cashier;
        private boolean voided;

        public String format() {
            return issuedOn;
        }
    }
}
