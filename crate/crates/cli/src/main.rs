fn main() {
    println!("spinnet cli (under construction)");
}
