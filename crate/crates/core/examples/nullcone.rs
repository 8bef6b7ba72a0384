use orthoinv::algebra::make_field;
use orthoinv::invariants::InvariantId;
use orthoinv::witt::{null_cone_test, null_cone_vanishing, random_singular_tuple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let f = make_field(8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let v = random_singular_tuple(6, 3, &f, &mut rng).unwrap();
    println!("random singular tuple in null-cone: {}", null_cone_test(&v));
    for name in ["DELTA:nu=2", "FEVEN:nu=2,t=2", "F:1,2|3,4", "TR:1,2,3"] {
        let id: InvariantId = name.parse().unwrap();
        let cert = null_cone_vanishing(&id, None, 20, 0, &f).unwrap();
        println!("{name}: {:?} on {} tuples", cert.status, cert.trials);
    }
}
