use orthoinv::groups::GroupId;
use orthoinv::invariants::{b_ij, tr_inv};
use orthoinv::invspace::{is_decomposable, SpaceOptions};

fn main() {
    let opts = SpaceOptions::default();
    for (name, p, g) in [
        ("B^(1,2|3,4)", b_ij(&[1, 2], &[3, 4]).unwrap(), GroupId::orthogonal(2)),
        ("B^(1,2|1,3)", b_ij(&[1, 2], &[1, 3]).unwrap(), GroupId::orthogonal(2)),
        ("Tr^(1,2,3)", tr_inv(&[1, 2, 3]).unwrap(), GroupId::orthogonal(3)),
    ] {
        let d = is_decomposable(&p, g, &opts).unwrap();
        let rec = d.record(g, &p);
        println!("{name}: decomposable = {}, certificate checks = {}", rec.decomposable, d.verify(&p));
        for [a, b] in rec.combination.iter().flatten() {
            println!("    ({a}) * ({b})");
        }
    }
}
