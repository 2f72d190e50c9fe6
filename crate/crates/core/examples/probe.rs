use recomb_knots::family::{FamilyParams, LinkClass};
use recomb_knots::fingerprint::identify;
use recomb_knots::mcn::minimal_form;

fn main() {
    let t = FamilyParams::new(-1, -2, 2, 1);
    let mf = minimal_form(t);
    println!("case {:?} kind {:?} form {:?} mcn {}", mf.case, mf.kind, mf.form, mf.mcn);
    let fp = recomb_knots::fingerprint::Fingerprint::of_class(&mf.form).unwrap();
    println!("fp: {fp}");
    println!("identify: {:?}", identify(&fp));
    for probe in [LinkClass::Torus(3), LinkClass::Torus(-3), LinkClass::Clasp(2,2), LinkClass::Clasp(-2,-2)] {
        let p = recomb_knots::fingerprint::Fingerprint::of_class(&probe).unwrap();
        println!("  {probe:?}: equal={}", p == fp);
    }
    // which 3-crossing tuples share it
    for p in -9i32..=9 {
        for q in -9i32..=9 {
            for r in 0..=9 {
                for s in -9i32..=9 {
                    if p.abs()+q.abs()+r+s.abs() > 9 { continue; }
                    let u = FamilyParams::new(p,q,r,s);
                    if !u.is_normalized() { continue; }
                    let m = recomb_knots::mcn::mcn(u);
                    if m != 3 { continue; }
                    let f = minimal_form(u);
                    let g = recomb_knots::fingerprint::Fingerprint::of_class(&f.form).unwrap();
                    if g == fp {
                        println!("  mcn3 partner: {u} case {:?} form {:?}", f.case, f.form);
                    }
                }
            }
        }
    }
}
