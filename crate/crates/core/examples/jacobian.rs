use orthoinv::algebra::make_field;
use orthoinv::invspace::{field_coordinates, jacobian_rank, standard_point};

fn main() {
    let f = make_field(8).unwrap();
    for (n, m) in [(4, 2), (4, 4), (3, 3), (5, 5)] {
        let coords = field_coordinates(n, m).unwrap();
        let polys: Vec<_> = coords.iter().map(|c| c.1.clone()).collect();
        let rank = jacobian_rank(&polys, &standard_point(n, m), &f);
        println!("(n, m) = ({n}, {m}): rank {rank} of {}", coords.len());
    }
}
