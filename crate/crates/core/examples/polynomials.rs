use orthoinv::algebra::{parse_gf2_poly, parse_int_poly, Gf2Poly};

fn main() {
    let p = parse_gf2_poly("x1_1 + y1_1").unwrap();
    println!("(x + y)^2 = {}", p.pow(2));
    println!("(x + y) + (x + y) = {}", p.add(&p));

    let q = parse_int_poly("x1_1*y1_2 + y1_1*x1_2 + 2*z_1*z_2").unwrap();
    println!("over Z: {q}");
    println!("mod 2:  {}", q.reduce_mod2());

    let mixed: Gf2Poly = parse_gf2_poly("x1_1*y1_1 + x1_1*y1_2 + x1_2^2").unwrap();
    for (alpha, c) in mixed.components() {
        println!("component {alpha:?}: {c}");
    }
}
