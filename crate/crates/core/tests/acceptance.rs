use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orthoinv::algebra::{make_field, Fe, FieldDesc, Gf2, Gf2Poly, Monomial, Var};
use orthoinv::groups::{
    check_under, invariance_check, random_element, swap_x1_y1, symplectic_witness, CheckMode, CheckOptions, GroupId,
    GroupKind, NamedAction, Status,
};
use orthoinv::invariants::{
    b_ij, b_inv, b_product_expand, d_int, d_inv, delta_inv, f_even, f_inv, g_inv, g_relation_signed, gamma_relation,
    gram_det, l_poly, match_sum, p6, q_inv, substitute_gram, tr_inv, InvariantId,
};
use orthoinv::invspace::{
    express_qb, field_coordinates, invariant_space, is_decomposable, jacobian_rank, standard_point,
    DecompositionCertificate, InvSpaceError, SpaceOptions,
};
use orthoinv::witt::{
    field_det, fingerprint, is_generic, null_cone_vanishing, realize_gram, same_orbit_generic, GramData, VectorTuple,
    Verdict,
};

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Duration,
    start: Instant,
    checks: Vec<(String, bool)>,
}

impl Criterion {
    fn new(number: u32, title: &'static str, limit_secs: u64) -> Criterion {
        Criterion { number, title, limit: Duration::from_secs(limit_secs), start: Instant::now(), checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    fn finish(mut self) {
        let elapsed = self.start.elapsed();
        let limit = self.limit;
        self.check(format!("runtime {:.1?} within {:?}", elapsed, limit), elapsed <= limit);
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect();
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [{}]: {verdict} ({} checks)", self.number, self.title, self.checks.len());
        for f in &failed {
            println!("    failed: {f}");
        }
        assert!(failed.is_empty(), "criterion {} failed: {failed:?}", self.number);
    }
}

fn symbolic() -> CheckOptions {
    CheckOptions { mode: CheckMode::Symbolic, ..CheckOptions::default() }
}

fn passes(p: &Gf2Poly, g: GroupId, opts: &CheckOptions) -> bool {
    invariance_check(p, g, opts).map(|c| c.passed()).unwrap_or(false)
}

fn random_columns(field: &FieldDesc, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Fe>> {
    (0..m).map(|_| (0..n).map(|_| rng.gen_range(0..field.order())).collect()).collect()
}

/// `q(v) = sum x_t y_t + z^2`, written out from the coordinates.
fn q_oracle(f: &FieldDesc, v: &[Fe]) -> Fe {
    let nu = v.len() / 2;
    let mut acc = 0;
    for t in 0..nu {
        acc ^= f.mul(v[t], v[nu + t]);
    }
    if v.len() % 2 == 1 {
        acc ^= f.mul(v[2 * nu], v[2 * nu]);
    }
    acc
}

fn beta_oracle(f: &FieldDesc, u: &[Fe], v: &[Fe]) -> Fe {
    let s: Vec<Fe> = u.iter().zip(v).map(|(a, b)| a ^ b).collect();
    q_oracle(f, &s) ^ q_oracle(f, u) ^ q_oracle(f, v)
}

/// Row-reduced basis of a set of GF(2) polynomials, as sorted monomial sets.
fn reduced_basis(polys: &[Gf2Poly]) -> BTreeSet<Vec<String>> {
    let mut rows: Vec<BTreeSet<String>> =
        polys.iter().map(|p| p.monomials().map(|m| m.to_string()).collect()).filter(|r: &BTreeSet<String>| !r.is_empty()).collect();
    let mut done: Vec<BTreeSet<String>> = Vec::new();
    while let Some(mut r) = rows.pop() {
        for d in &done {
            let lead = d.iter().next_back().unwrap();
            if r.contains(lead) {
                r = r.symmetric_difference(d).cloned().collect();
            }
        }
        if r.is_empty() {
            continue;
        }
        let lead = r.iter().next_back().unwrap().clone();
        for d in done.iter_mut() {
            if d.contains(&lead) {
                *d = d.symmetric_difference(&r).cloned().collect();
            }
        }
        done.push(r);
    }
    done.into_iter().map(|r| r.into_iter().collect()).collect()
}

/// Rank over GF(2) of bit rows.
fn bit_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in (0..64).rev() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row >> bit & 1 == 1 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn criterion_01_base_invariance() {
    let mut c = Criterion::new(1, "base invariance", 10);
    for nu in 1..=3usize {
        let n = 2 * nu;
        let g = GroupId::orthogonal(n);
        for i in 1..=3 {
            c.check(format!("Q^({i}) under O({n})"), passes(&q_inv(i, n).unwrap(), g, &symbolic()));
            for j in i + 1..=3 {
                c.check(format!("B^({i}{j}) under O({n})"), passes(&b_inv(i, j, n).unwrap(), g, &symbolic()));
            }
        }
    }
    let f = make_field(8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 2..=6usize {
        let idx: Vec<u32> = (1..=n as u32).collect();
        let d = d_inv(&idx, n).unwrap();
        let mut all_equal = true;
        let mut matches_det = true;
        for _ in 0..64 {
            let r = rng.gen_range(1..=6);
            let a = random_element(GroupId::orthogonal(n), &f, r, &mut rng).unwrap().matrix().unwrap();
            let v = VectorTuple::new(n, f, random_columns(&f, n, n, &mut rng)).unwrap();
            let w = v.transform(&a);
            let dv = v.eval(&d);
            all_equal &= dv == w.eval(&d);
            matches_det &= dv == field_det(&f, &v.columns);
        }
        c.check(format!("D^(1..{n}) equal at 64 sampled elements"), all_equal);
        c.check(format!("D^(1..{n}) agrees with the determinant"), matches_det);
    }
    c.finish();
}

/// Dimension of the O(2) invariants of multidegree `(1, ..., 1)` in `m`
/// vectors: the kernel of `swap - 1` on the torus-weight-zero monomials.
fn o2_multilinear_oracle(m: u32) -> usize {
    let masks: Vec<u32> = (0..1u32 << m).filter(|s| s.count_ones() * 2 == m).collect();
    let pos: HashMap<u32, usize> = masks.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let full = (1u32 << m) - 1;
    let rows: Vec<u64> = masks.iter().map(|&s| (1u64 << pos[&s]) ^ (1u64 << pos[&(full ^ s)])).collect();
    masks.len() - bit_rank(rows)
}

fn random_multiset(rng: &mut ChaCha8Rng, len: usize) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(1..=4)).collect()
}

#[test]
fn criterion_02_o2_structure() {
    let mut c = Criterion::new(2, "O(2) structure", 30);
    let opts = SpaceOptions::default();
    let o2 = GroupId::orthogonal(2);
    let dim = |alpha: &[u32]| invariant_space(o2, alpha, &opts).map(|s| s.dimension()).ok();
    c.check("dim (1,1) = 1", dim(&[1, 1]) == Some(1));
    c.check("dim (1,1,1,1) = 3", dim(&[1, 1, 1, 1]) == Some(3));
    let oracle = o2_multilinear_oracle(6);
    c.check(format!("dim (1,1,1,1,1,1) = oracle {oracle}"), dim(&[1; 6]) == Some(oracle));
    c.check("oracle agrees on (1,1,1,1)", o2_multilinear_oracle(4) == 3);

    let b = b_ij(&[1, 2], &[3, 4]).unwrap();
    let d = is_decomposable(&b, o2, &opts).unwrap();
    c.check("B^(1,2|3,4) indecomposable", !d.decomposable && d.verify(&b));

    let b = b_ij(&[1, 2], &[1, 3]).unwrap();
    let d = is_decomposable(&b, o2, &opts).unwrap();
    let q1 = q_inv(1, 2).unwrap();
    let b23 = b_ij(&[2], &[3]).unwrap();
    let cert_ok = match &d.certificate {
        DecompositionCertificate::Combination(terms) => {
            terms.len() == 1 && {
                let (a, bb) = &terms[0];
                (*a == q1 && *bb == b23) || (*a == b23 && *bb == q1)
            }
        }
        _ => false,
    };
    c.check("B^(1,2|1,3) = Q^(1) B^(2|3)", d.decomposable && cert_ok && d.verify(&b));

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut all = true;
    for _ in 0..50 {
        let (s, t) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (e, f) = (random_multiset(&mut rng, s), random_multiset(&mut rng, s));
        let (g, h) = (random_multiset(&mut rng, t), random_multiset(&mut rng, t));
        let lhs = b_ij(&e, &f).unwrap().mul(&b_ij(&g, &h).unwrap());
        let ((p1, q1), (p2, q2)) = b_product_expand(&e, &f, &g, &h).unwrap();
        let rhs = b_ij(&p1, &q1).unwrap().add(&b_ij(&p2, &q2).unwrap());
        all &= lhs == rhs;
    }
    c.check("product formula on 50 random multisets", all);
    c.finish();
}

/// `V^(s) := I`: `z^(s) = 1`, `x^(s) = y^(s) = 0`.
fn pi(p: &Gf2Poly, s: u32) -> Gf2Poly {
    p.specialize(&HashMap::from([(Var::z(s), 1u8), (Var::x(1, s), 0), (Var::y(1, s), 0)]))
}

fn set_z_zero(p: &Gf2Poly, m: u32) -> Gf2Poly {
    p.specialize(&(1..=m).map(|i| (Var::z(i), 0u8)).collect())
}

#[test]
fn criterion_03_o3() {
    let mut c = Criterion::new(3, "O(3)", 60);
    let o3 = GroupId::orthogonal(3);
    c.check("Tr^(1,2) = B^(12)", tr_inv(&[1, 2]).unwrap() == b_inv(1, 2, 3).unwrap());
    for s in 1..=4u32 {
        let idx: Vec<u32> = (1..=s).collect();
        c.check(format!("Tr^(1..{s}) passes O(3) symbolically"), passes(&tr_inv(&idx).unwrap(), o3, &symbolic()));
    }
    let opts = SpaceOptions::default();
    let t3 = tr_inv(&[1, 2, 3]).unwrap();
    let d = is_decomposable(&t3, o3, &opts).unwrap();
    c.check("Tr^(1,2,3) indecomposable", !d.decomposable && d.verify(&t3));
    for s in 2..=4u32 {
        let idx: Vec<u32> = (1..=s).collect();
        c.check(
            format!("pi(Tr^(1..{s})) = Tr^(1..{})", s - 1),
            pi(&tr_inv(&idx).unwrap(), s) == tr_inv(&idx[..s as usize - 1]).unwrap(),
        );
    }
    let t2 = pi(&t3, 3);
    let d = is_decomposable(&t2, o3, &opts).unwrap();
    c.check("pi(Tr^(1,2,3)) is indecomposable", !d.decomposable);
    let t4 = set_z_zero(&tr_inv(&[1, 2, 3, 4]).unwrap(), 4);
    c.check("Tr^(1,2,3,4) at z = 0 is B^(1,3|2,4)", t4 == b_ij(&[1, 3], &[2, 4]).unwrap());
    let d = is_decomposable(&t4, GroupId::orthogonal(2), &opts).unwrap();
    c.check("B^(1,3|2,4) indecomposable under O(2)", !d.decomposable);
    c.finish();
}

fn g_substitution(p: &Gf2Poly, i: &[u32], j: &[u32]) -> Gf2Poly {
    let s = i.len();
    let mut values: HashMap<Var, u8> = HashMap::new();
    for &k in i.iter().chain(&j[..s - 2]) {
        values.insert(Var::x(2, k), 0);
        values.insert(Var::y(2, k), 0);
    }
    // [[x_1, x_2], [y_2, y_1]] = [[0, 0], [1, 0]] and [[0, 1], [0, 0]]
    for (k, (x1, x2, y2, y1)) in [(j[s - 2], (0, 0, 1, 0)), (j[s - 1], (0, 1, 0, 0))] {
        values.insert(Var::x(1, k), x1);
        values.insert(Var::x(2, k), x2);
        values.insert(Var::y(2, k), y2);
        values.insert(Var::y(1, k), y1);
    }
    p.specialize(&values)
}

#[test]
fn criterion_04_so4_o4() {
    let mut c = Criterion::new(4, "SO(4) and O(4)", 60);
    let f = f_inv(&[1, 2], &[3, 4]).unwrap();
    c.check("F^(1,2|3,4) passes SO(4)", passes(&f, GroupId::special(4), &symbolic()));
    let restricted = f.specialize(&(1..=4).flat_map(|i| [(Var::x(2, i), 0u8), (Var::y(2, i), 0)]).collect());
    c.check("F at x2 = y2 = 0 is B^(1,2|3,4)", restricted == b_ij(&[1, 2], &[3, 4]).unwrap());
    let g = g_inv(&[1, 2], &[3, 4]).unwrap();
    c.check("G^(1,2|3,4) passes O(4)", passes(&g, GroupId::orthogonal(4), &symbolic()));
    c.check("G^(1,2|3,4) turns into B^(1|2)", g_substitution(&g, &[1, 2], &[3, 4]) == b_ij(&[1], &[2]).unwrap());
    let g3 = g_inv(&[1, 2, 3], &[4, 5, 6]).unwrap();
    c.check(
        "G^(1,2,3|4,5,6) turns into B^(1,2|3,4)",
        g_substitution(&g3, &[1, 2, 3], &[4, 5, 6]) == b_ij(&[1, 2], &[3, 4]).unwrap(),
    );
    c.finish();
}

#[test]
fn criterion_05_exotic_even() {
    let mut c = Criterion::new(5, "exotic even-dimensional invariant", 300);
    let f = f_even(2, 2).unwrap();
    c.check(format!("f_even(2,2) has 100800 terms (got {})", f.len()), f.len() == 100800);
    c.check("f_even(2,2) passes O(4)", passes(&f, GroupId::orthogonal(4), &symbolic()));
    let w = check_under(&f, &symplectic_witness(4)).unwrap();
    let witness_ok = w.as_ref().and_then(|w| w.monomial.as_ref()).is_some_and(|m| !m.is_empty());
    if let Some(m) = w.and_then(|w| w.monomial) {
        println!("    symplectic witness monomial: {m}");
    }
    c.check("x1 -> x1 + y1 moves f_even(2,2) with a witness monomial", witness_ok);
    c.finish();
}

#[test]
fn criterion_06_sl2_sextic() {
    let mut c = Criterion::new(6, "unimodular sextic", 30);
    let p = p6().reduce_mod2();
    c.check("20 terms", p.len() == 20);
    c.check("passes SL(2) symbolically", passes(&p, GroupId::symplectic(2), &symbolic()));
    c.finish();
}

#[test]
fn criterion_07_delta_parity() {
    let mut c = Criterion::new(7, "Delta and parity", 120);
    for nu in 1..=3u32 {
        let n = 2 * nu as usize;
        let ms = match_sum(nu).unwrap();
        let d = d_int(&(1..=n as u32).collect::<Vec<_>>(), n).unwrap();
        c.check(format!("match sum = D mod 2 (nu = {nu})"), ms.reduce_mod2() == d.reduce_mod2());
        c.check(format!("(match sum - D) / 2 exists (nu = {nu})"), ms.sub(&d).divide_exact(&2.into()).is_ok());
        let delta = delta_inv(nu).unwrap();
        let opts = if nu <= 2 {
            symbolic()
        } else {
            CheckOptions { mode: CheckMode::Randomized, seed: 3, ..CheckOptions::default() }
        };
        let cert = invariance_check(&delta, GroupId::special(n), &opts).unwrap();
        c.check(format!("Delta passes SO({n}) ({})", cert.mode), cert.passed());
        let swap = NamedAction { name: "swap".into(), action: swap_x1_y1(n) };
        c.check(format!("Delta moved by x1 <-> y1 (nu = {nu})"), check_under(&delta, &swap).unwrap().is_some());
    }
    c.finish();
}

#[test]
fn criterion_08_relations() {
    let mut c = Criterion::new(8, "relations", 120);
    for n in [3, 5] {
        let g = g_relation_signed(n).unwrap();
        c.check(format!("G relation vanishes over Z (n = {n})"), substitute_gram(&g, n).unwrap().is_zero());
        c.check(format!("Gram determinant even (n = {n})"), gram_det(n).unwrap().is_divisible_by(2));
    }
    for n in [2, 4] {
        let g = gamma_relation(n).unwrap();
        c.check(format!("Gamma relation vanishes over Z (n = {n})"), substitute_gram(&g, n).unwrap().is_zero());
        c.check(format!("L divisible by 4 (n = {n})"), l_poly(n).unwrap().is_divisible_by(4));
    }
    c.finish();
}

/// Products of abstract `Q^(i)` (weight 2 on `i`) and `B^(ij)` (weight 1 on
/// `i` and `j`) of multidegree `alpha`.
fn qb_monomials(alpha: &[u32]) -> Vec<Monomial> {
    let m = alpha.len() as u32;
    let mut gens: Vec<(Var, Vec<u32>)> = (1..=m).map(|i| (Var::gram_q(i), vec![i, i])).collect();
    for i in 1..=m {
        for j in i + 1..=m {
            gens.push((Var::gram_b(i, j), vec![i, j]));
        }
    }
    fn go(gens: &[(Var, Vec<u32>)], k: usize, left: &[u32], acc: Monomial, out: &mut Vec<Monomial>) {
        if left.iter().all(|&e| e == 0) {
            out.push(acc);
            return;
        }
        let Some((v, w)) = gens.get(k) else { return };
        let mut left = left.to_vec();
        let mut acc = acc;
        loop {
            go(gens, k + 1, &left, acc.clone(), out);
            if w.iter().any(|&i| left[i as usize - 1] < w.iter().filter(|&&j| j == i).count() as u32) {
                break;
            }
            for &i in w {
                left[i as usize - 1] -= 1;
            }
            acc = acc.mul(&Monomial::var(*v));
        }
    }
    let mut out = Vec::new();
    go(&gens, 0, alpha, Monomial::one(), &mut out);
    out
}

fn back_substitute(p: &Gf2Poly, n: usize) -> Gf2Poly {
    let mut map: HashMap<Var, Gf2Poly> = HashMap::new();
    for v in p.variables() {
        let img = match v.to_string().as_str() {
            s if s.starts_with('Q') => q_inv(s[1..].parse().unwrap(), n).unwrap(),
            s if s.starts_with('B') => {
                let (i, j) = s[1..].split_once('_').unwrap();
                b_inv(i.parse().unwrap(), j.parse().unwrap(), n).unwrap()
            }
            _ => continue,
        };
        map.insert(v, img);
    }
    p.substitute(&map).unwrap()
}

#[test]
fn criterion_09_rewriting() {
    let mut c = Criterion::new(9, "rewriting in Q and B", 120);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let alphas: [&[u32]; 5] = [&[2, 2], &[2, 1, 1], &[2, 2, 2], &[3, 1, 2], &[1, 1, 1, 1]];
    let opts = CheckOptions::default();
    for n in [3, 5] {
        let mut ok = 0;
        for _ in 0..20 {
            let alpha = alphas[rng.gen_range(0..alphas.len())];
            let monos = qb_monomials(alpha);
            let mut abstract_poly = Gf2Poly::zero(Gf2);
            while abstract_poly.is_zero() {
                for m in &monos {
                    if rng.gen_bool(0.5) {
                        abstract_poly.add_term(m.clone(), 1);
                    }
                }
            }
            let f = back_substitute(&abstract_poly, n);
            if f.is_zero() {
                ok += 1;
                continue;
            }
            if let Ok(e) = express_qb(&f, n, &opts) {
                ok += usize::from(back_substitute(&e, n) == f);
            }
        }
        c.check(format!("20 random Q/B invariants rewritten exactly (n = {n}): {ok}/20"), ok == 20);
    }
    let t = tr_inv(&[1, 2, 3]).unwrap();
    c.check("odd z rejected", matches!(express_qb(&t, 3, &opts), Err(InvSpaceError::OddZ(_))));
    c.finish();
}

fn random_gram(f: &FieldDesc, m: usize, rng: &mut ChaCha8Rng) -> GramData {
    let mut beta = vec![vec![0; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let v = rng.gen_range(0..f.order());
            beta[i][j] = v;
            beta[j][i] = v;
        }
    }
    let q = (0..m).map(|_| rng.gen_range(0..f.order())).collect();
    GramData::new(*f, beta, q, None, None).unwrap()
}

#[test]
fn criterion_10_witt() {
    let mut c = Criterion::new(10, "Gram realization, orbits, null-cone", 120);
    let f = make_field(8).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in 1..=6usize {
        for m in 1..=n {
            let mut ok = 0;
            for _ in 0..100 {
                let g = random_gram(&f, m, &mut rng);
                let Ok(r) = realize_gram(&g, n) else { continue };
                let (field, g) = if r.extended {
                    let ext = f.quadratic_extension().unwrap();
                    (ext, g.embed(&f.embedding_into(&ext).unwrap()))
                } else {
                    (f, g)
                };
                let v = &r.tuple.columns;
                let good = r.tuple.field == field
                    && v.len() == m
                    && (0..m).all(|i| {
                        q_oracle(&field, &v[i]) == g.q[i] && (0..m).all(|j| beta_oracle(&field, &v[i], &v[j]) == g.beta[i][j])
                    });
                ok += usize::from(good);
            }
            c.check(format!("realize round trip (n = {n}, m = {m}): {ok}/100"), ok == 100);
        }
    }

    let (mut same, mut different, mut tries) = (0, 0, 0);
    while (same < 100 || different < 100) && tries < 2000 {
        tries += 1;
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(1..=n + 1);
        let kind = if rng.gen_bool(0.5) { GroupKind::SO } else { GroupKind::O };
        let v = VectorTuple::new(n, f, random_columns(&f, n, m, &mut rng)).unwrap();
        if !is_generic(&v, kind) {
            continue;
        }
        if same < 100 {
            let a = random_element(GroupId { kind, n }, &f, rng.gen_range(1..=6), &mut rng).unwrap().matrix().unwrap();
            same += usize::from(same_orbit_generic(&v, &v.transform(&a), kind).unwrap() == Verdict::Same);
        }
        let w = VectorTuple::new(n, f, random_columns(&f, n, m, &mut rng)).unwrap();
        if different < 100 && is_generic(&w, kind) && fingerprint(&v, kind).unwrap() != fingerprint(&w, kind).unwrap() {
            different += usize::from(same_orbit_generic(&v, &w, kind).unwrap() == Verdict::Different);
        }
    }
    c.check(format!("same orbit for (v, A v): {same}/100"), same == 100);
    c.check(format!("different orbits for distinct fingerprints: {different}/100"), different == 100);

    for name in ["DELTA:nu=2", "DELTA:nu=3", "FEVEN:nu=2,t=2", "F:1,2|3,4", "TR:1,2,3"] {
        let id: InvariantId = name.parse().unwrap();
        let cert = null_cone_vanishing(&id, None, 100, 10, &f).unwrap();
        c.check(format!("{name} vanishes on 100 totally singular tuples"), cert.status == Status::Pass);
    }
    c.finish();
}

#[test]
fn criterion_11_jacobian() {
    let mut c = Criterion::new(11, "Jacobian rank", 60);
    let f = make_field(8).unwrap();
    for ((n, m), expected) in [((4, 2), 3), ((4, 4), 10), ((3, 3), 6), ((5, 5), 15)] {
        let two_nu = 2 * (n / 2);
        let lim = m.min(two_nu);
        let count = lim + (1..=lim).map(|i| m - i).sum::<usize>() + if n % 2 == 1 { m.saturating_sub(two_nu) } else { 0 };
        let coords = field_coordinates(n, m).unwrap();
        let polys: Vec<Gf2Poly> = coords.iter().map(|c| c.1.clone()).collect();
        let rank = jacobian_rank(&polys, &standard_point(n, m), &f);
        c.check(
            format!("(n, m) = ({n}, {m}): rank {rank}, {} coordinates, expected {expected}", coords.len()),
            rank == coords.len() && coords.len() == count && count == expected,
        );
    }
    c.finish();
}

#[test]
fn criterion_12_small_m() {
    let mut c = Criterion::new(12, "small-m fundamental theorem", 120);
    let g = GroupId::orthogonal(4);
    let opts = SpaceOptions { mode: CheckMode::Symbolic, ..SpaceOptions::default() };
    let q1 = q_inv(1, 4).unwrap();
    let q2 = q_inv(2, 4).unwrap();
    let b = b_inv(1, 2, 4).unwrap();
    for a in 0..=4u32 {
        for bb in 0..=4 - a {
            if a + bb == 0 {
                continue;
            }
            let space = invariant_space(g, &[a, bb], &opts).unwrap();
            let mut products = Vec::new();
            for k in 0..=a.min(bb) {
                if (a - k) % 2 == 0 && (bb - k) % 2 == 0 {
                    products.push(q1.pow((a - k) / 2).mul(&q2.pow((bb - k) / 2)).mul(&b.pow(k)));
                }
            }
            c.check(
                format!("({a},{bb}): dimension {} vs {} products", space.dimension(), products.len()),
                reduced_basis(&space.basis) == reduced_basis(&products),
            );
        }
    }
    c.finish();
}
