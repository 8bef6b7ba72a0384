use orthoinv::groups::{check_under, invariance_check, symplectic_witness, CheckMode, CheckOptions, GroupId};
use orthoinv::invariants::{f_even, f_even_term_count};

fn main() {
    let f = f_even(2, 2).unwrap();
    println!("f_even(2,2): {} terms (count formula {})", f.len(), f_even_term_count(2, 2).unwrap());
    let opts = CheckOptions { mode: CheckMode::Symbolic, ..CheckOptions::default() };
    let cert = invariance_check(&f, GroupId::orthogonal(4), &opts).unwrap();
    println!("O(4): {:?}", cert.status);
    if let Some(w) = check_under(&f, &symplectic_witness(4)).unwrap() {
        println!("not symplectic, witness {}", w.monomial.unwrap_or_default());
    }
}
