use orthoinv::algebra::make_field;
use orthoinv::groups::{random_element, GroupId, GroupKind};
use orthoinv::witt::{fingerprint, same_orbit_generic, VectorTuple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let f = make_field(8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let v = VectorTuple::new(4, f, vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8], vec![9, 10, 11, 12], vec![1, 0, 0, 1]]).unwrap();
    let odd = random_element(GroupId::orthogonal(4), &f, 3, &mut rng).unwrap().matrix().unwrap();
    let w = v.transform(&odd);
    for kind in [GroupKind::O, GroupKind::SO] {
        println!("{kind:?}: {:?}", same_orbit_generic(&v, &w, kind).unwrap());
    }
    let fp = fingerprint(&v, GroupKind::SO).unwrap();
    println!("Delta(v) = {:?}, Delta(g v) = {:?}", fp.delta, fingerprint(&w, GroupKind::SO).unwrap().delta);
}
