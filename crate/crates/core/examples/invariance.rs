use orthoinv::groups::{invariance_check, CheckMode, CheckOptions, GroupId};
use orthoinv::invariants::{delta_inv, q_inv};

fn main() {
    let symbolic = CheckOptions { mode: CheckMode::Symbolic, ..CheckOptions::default() };
    let q = q_inv(1, 6).unwrap();
    let cert = invariance_check(&q, GroupId::orthogonal(6), &symbolic).unwrap();
    println!("Q^(1) under O(6): {:?} via {} generators", cert.status, cert.generators_checked);

    let delta = delta_inv(2).unwrap();
    for g in [GroupId::special(4), GroupId::orthogonal(4)] {
        let cert = invariance_check(&delta, g, &symbolic).unwrap();
        println!("Delta under {g}: {:?}", cert.status);
    }

    let randomized = CheckOptions { mode: CheckMode::Randomized, seed: 7, ..CheckOptions::default() };
    let cert = invariance_check(&delta_inv(3).unwrap(), GroupId::special(6), &randomized).unwrap();
    println!("Delta (nu = 3) under SO(6), randomized: {:?}", cert.status);
}
