use recomb_knots::family::LinkClass;
use recomb_knots::fingerprint::Fingerprint;
use std::time::Instant;

fn main() {
    for n in [14i32, 16, 18, 20, 22] {
        let lc = LinkClass::Torus(n);
        let t0 = Instant::now();
        let fp = Fingerprint::of_class(&lc).unwrap();
        println!("T(2,{n}): {:?}  comps={}", t0.elapsed(), fp.components());
    }
}
