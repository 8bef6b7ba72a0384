use orthoinv::algebra::make_field;
use orthoinv::witt::{gram_data, realize_gram, GramData};

fn main() {
    let f = make_field(8).unwrap();
    let g = GramData::new(f, vec![vec![0, 3, 0], vec![3, 0, 5], vec![0, 5, 0]], vec![1, 0, 9], None, None).unwrap();
    for n in [3, 4, 6] {
        let r = realize_gram(&g, n).unwrap();
        let back = gram_data(&r.tuple).unwrap();
        println!("n = {n}: {:?}, round trip {}", r.tuple.columns, g.agrees_with(&back));
    }

    let f2 = make_field(1).unwrap();
    let anisotropic = GramData::new(f2, vec![vec![0, 1], vec![1, 0]], vec![1, 1], None, None).unwrap();
    let r = realize_gram(&anisotropic, 2).unwrap();
    println!("x^2 + xy + y^2 over GF(2): realized over GF(2^{}), extended = {}", r.tuple.field.degree(), r.extended);
    println!("{}", serde_json::to_string(&r).unwrap());
}
