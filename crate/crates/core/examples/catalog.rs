use orthoinv::invariants::InvariantId;

fn main() {
    for name in ["Q:1", "B:1,2", "D:1,2,3", "BIJ:1,2|3,4", "TR:1,2,3", "F:1,2|3,4", "G:1,2|3,4", "P6", "DELTA:nu=2"] {
        let id: InvariantId = name.parse().unwrap();
        let p = id.build(id.natural_dimension().or(Some(3))).unwrap();
        println!("{:<14} {:>4} terms over {}", id.to_string(), p.len(), p.ring_name());
    }
    let id: InvariantId = "TR:1,2".parse().unwrap();
    println!("Tr^(1,2) = {}", id.build(None).unwrap());
}
