use orthoinv::groups::GroupId;
use orthoinv::invspace::{invariant_space, SpaceOptions};

fn main() {
    let opts = SpaceOptions::default();
    for alpha in [vec![1, 1], vec![1, 1, 1, 1], vec![1, 1, 1, 1, 1, 1], vec![2, 2]] {
        let s = invariant_space(GroupId::orthogonal(2), &alpha, &opts).unwrap();
        println!("O(2) {alpha:?}: dimension {} ({} torus-weight-zero monomials)", s.dimension(), s.columns);
    }
    let s = invariant_space(GroupId::orthogonal(4), &[1, 1], &opts).unwrap();
    for b in &s.basis {
        println!("O(4) (1,1): {b}");
    }
}
