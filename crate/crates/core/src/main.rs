fn main() {
    std::process::exit(recomb_knots::run());
}
