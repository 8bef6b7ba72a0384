use orthoinv::invariants::{gamma_relation, g_relation_signed, gram_det, l_poly, substitute_gram};

fn main() {
    for n in [3, 5] {
        let g = g_relation_signed(n).unwrap();
        println!("n = {n}: G has {} terms, vanishes = {}", g.len(), substitute_gram(&g, n).unwrap().is_zero());
        println!("        Gram determinant even: {}", gram_det(n).unwrap().is_divisible_by(2));
    }
    for n in [2, 4] {
        let g = gamma_relation(n).unwrap();
        println!("n = {n}: Gamma vanishes = {}", substitute_gram(&g, n).unwrap().is_zero());
        println!("        L divisible by 4: {}", l_poly(n).unwrap().is_divisible_by(4));
    }
}
