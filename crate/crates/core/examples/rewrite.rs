use orthoinv::algebra::parse_gf2_poly;
use orthoinv::groups::CheckOptions;
use orthoinv::invariants::tr_inv;
use orthoinv::invspace::express_qb;

fn main() {
    let opts = CheckOptions::default();
    println!("Tr^(1,2) = {}", express_qb(&tr_inv(&[1, 2]).unwrap(), 3, &opts).unwrap());
    let q1 = parse_gf2_poly("x1_1*y1_1 + z_1^2").unwrap();
    let p = q1.mul(&tr_inv(&[2, 3]).unwrap());
    println!("Q^(1) Tr^(2,3) = {}", express_qb(&p, 3, &opts).unwrap());
    match express_qb(&parse_gf2_poly("z_1").unwrap(), 3, &opts) {
        Ok(e) => println!("unexpected: {e}"),
        Err(e) => println!("z_1: {e}"),
    }
}
