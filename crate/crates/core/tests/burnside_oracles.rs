mod common;

use common::{all_pairs, small_up_to, sub, table};
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use pullbacklab::burnside::{
    derived_subgroups, deviation, gluck_idempotent, ind_matrix, inner_product_g, inner_product_h,
    kernel_basis, nonneg_split, normalizer_weights, res_matrix, res_on_idempotent, res_on_idempotent_formula,
    unique_v, BurnsideRing, BurnsideVector, IdempotentBasis, RationalBurnsideVector, SubgroupPair,
};
use pullbacklab::linalg::{rank, QMatrix};
use pullbacklab::perm::{is_normal, PermGroup, SubgroupClassTable};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn small_int(x: &BigInt) -> i128 {
    i128::try_from(x).unwrap()
}

/// Least `Δ` with `Δ·e_top` in the column lattice of `n`, by integer row
/// echelon form of the transposed generators and exact back-substitution.
fn deviation_by_echelon(n: &[Vec<BigInt>], top: usize) -> i128 {
    let rows = n.len();
    let mut gens: Vec<Vec<i128>> = (0..n[0].len())
        .map(|c| (0..rows).map(|r| small_int(&n[r][c])).collect())
        .collect();
    let mut basis: Vec<Vec<i128>> = Vec::new();
    for col in 0..rows {
        loop {
            let live: Vec<usize> = (0..gens.len()).filter(|&i| gens[i][col] != 0).collect();
            if live.len() <= 1 {
                if let Some(&i) = live.first() {
                    basis.push(gens.remove(i));
                }
                break;
            }
            let p = *live.iter().min_by_key(|&&i| gens[i][col].abs()).unwrap();
            let pivot = gens[p].clone();
            for &i in &live {
                if i != p {
                    let f = gens[i][col] / pivot[col];
                    for (x, y) in gens[i].iter_mut().zip(&pivot) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    let mut residual: Vec<Ratio<i128>> = (0..rows).map(|r| Ratio::from_integer((r == top) as i128)).collect();
    let mut lcm = 1i128;
    for b in &basis {
        let pc = b.iter().position(|&x| x != 0).unwrap();
        let c = residual[pc] / Ratio::from_integer(b[pc]);
        for (r, &x) in residual.iter_mut().zip(b) {
            *r -= c * Ratio::from_integer(x);
        }
        let d = *c.denom();
        lcm = num_integer::lcm(lcm, d);
    }
    assert!(residual.iter().all(|r| r.is_zero()), "target outside the rational span");
    lcm
}

fn pairs_up_to(max: usize) -> Vec<SubgroupPair> {
    small_up_to(max).into_iter().flat_map(|n| all_pairs(&table(n))).collect()
}

#[test]
fn deviation_agrees_with_echelon_oracle() {
    for pair in pairs_up_to(24) {
        let res = res_matrix(&pair).unwrap();
        let n = pullbacklab::burnside::deviation_matrix(&pair, &res).unwrap();
        let top = pair.table_h().whole_class();
        let d = deviation(&pair, &res).unwrap();
        assert_eq!(small_int(&d.value), deviation_by_echelon(&n, top), "{pair:?}");
    }
}

/// `[K\G]·[L\G] = Σ [K ∩ g⁻¹Lg \ G]` over double cosets `L g K`,
/// with the double cosets found by marking elements.
fn mackey(t: &SubgroupClassTable, i: usize, j: usize) -> Vec<u64> {
    let g: &PermGroup = t.group();
    let k = t.representative(i);
    let l = t.representative(j);
    let mut seen = vec![false; g.order()];
    let mut out = vec![0u64; t.len()];
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        for &a in l.elements() {
            for &b in k.elements() {
                seen[g.mul(g.mul(a, x), b)] = true;
            }
        }
        let stab = k.intersection(&l.conjugate(g, x));
        out[t.class_of(&stab).unwrap()] += 1;
    }
    out
}

#[test]
fn ring_structure_constants_match_mackey() {
    for name in small_up_to(24) {
        let t = table(name);
        let ring = BurnsideRing::new(t.clone()).unwrap();
        for i in 0..t.len() {
            for j in 0..t.len() {
                assert_eq!(ring.basis_product(i, j), &mackey(&t, i, j)[..], "{name} {i} {j}");
            }
        }
    }
}

#[test]
fn ring_examples() {
    let t = table("S3");
    let ring = BurnsideRing::new(t.clone()).unwrap();
    assert_eq!(ring.basis_product(1, 1), &[1, 1, 0, 0]);
    for j in 0..t.len() {
        let idx = t.class_index_in_group(j) as u64;
        let mut want = vec![0; t.len()];
        want[0] = idx;
        assert_eq!(ring.basis_product(0, j), &want[..]);
        let mut unit = vec![0; t.len()];
        unit[j] = 1;
        assert_eq!(ring.basis_product(j, t.whole_class()), &unit[..]);
    }
}

#[test]
fn restriction_is_a_unital_ring_morphism() {
    for name in small_up_to(24) {
        let t = table(name);
        let ring_g = BurnsideRing::new(t.clone()).unwrap();
        for pair in all_pairs(&t) {
            let ring_h = BurnsideRing::new(pair.table_h().clone()).unwrap();
            let res = res_matrix(&pair).unwrap();
            let one_g = BurnsideVector::one(t.clone());
            assert_eq!(res.apply(&one_g).unwrap(), BurnsideVector::one(pair.table_h().clone()));
            for i in 0..t.len() {
                for j in i..t.len() {
                    let bi = BurnsideVector::basis(t.clone(), i).unwrap();
                    let bj = BurnsideVector::basis(t.clone(), j).unwrap();
                    let lhs = res.apply(&ring_g.multiply(&bi, &bj).unwrap()).unwrap();
                    let rhs = ring_h
                        .multiply(&res.apply(&bi).unwrap(), &res.apply(&bj).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "{name}");
                }
            }
            for row in res.entries() {
                assert!(row.iter().all(|x| !x.is_negative()));
            }
        }
    }
}

#[test]
fn idempotent_basis_properties() {
    for name in small_up_to(24) {
        let t = table(name);
        let ring = BurnsideRing::new(t.clone()).unwrap();
        let basis = IdempotentBasis::new(t.clone()).unwrap();
        let mut sum = RationalBurnsideVector::zero(t.clone());
        for i in 0..t.len() {
            let e = basis.idempotent(i);
            assert_eq!(*e, gluck_idempotent(&t, i).unwrap());
            sum = sum.add(e).unwrap();
            for j in 0..t.len() {
                let p = ring.multiply(e, basis.idempotent(j)).unwrap();
                if i == j {
                    assert_eq!(&p, e, "{name} e{i}^2");
                } else {
                    assert!(p.is_zero(), "{name} e{i} e{j}");
                }
            }
        }
        assert_eq!(sum, RationalBurnsideVector::one(t.clone()));
        assert_eq!(rank(basis.matrix()), t.len());
        let top = t.whole_class();
        assert_eq!(basis.idempotent(top).coeffs()[top], BigRational::one());
        let e_triv = basis.idempotent(0);
        let mut want = vec![BigRational::zero(); t.len()];
        want[0] = q(1, t.group().order() as i64);
        assert_eq!(e_triv.coeffs(), &want[..]);
    }
}

#[test]
fn restriction_of_idempotents() {
    for name in small_up_to(24) {
        let t = table(name);
        let basis_g = IdempotentBasis::new(t.clone()).unwrap();
        for pair in all_pairs(&t) {
            let res = res_matrix(&pair).unwrap();
            let basis_h = IdempotentBasis::new(pair.table_h().clone()).unwrap();
            for l in 0..t.len() {
                assert_eq!(
                    res_on_idempotent(&res, &basis_g, l).unwrap(),
                    res_on_idempotent_formula(&pair, &basis_h, l).unwrap(),
                    "{name}"
                );
            }
            if !pair.is_whole() {
                assert!(res_on_idempotent(&res, &basis_g, t.whole_class()).unwrap().is_zero());
            }
        }
    }
    let t = table("S3");
    let g = t.group().clone();
    let pair = SubgroupPair::new(t.clone(), sub(&g, &["(1,2)"])).unwrap();
    let l = t.class_of(&sub(&g, &["(1,3)"])).unwrap();
    let basis_h = IdempotentBasis::new(pair.table_h().clone()).unwrap();
    let got = res_on_idempotent(&res_matrix(&pair).unwrap(), &IdempotentBasis::new(t.clone()).unwrap(), l).unwrap();
    assert_eq!(&got, basis_h.idempotent(pair.table_h().whole_class()));
    assert_eq!(normalizer_weights(&pair), vec![3, 1]);
}

fn unit(n: usize, i: usize) -> Vec<BigRational> {
    (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()
}

#[test]
fn adjointness_in_idempotent_coordinates() {
    for name in small_up_to(24) {
        let t = table(name);
        let basis_g = IdempotentBasis::new(t.clone()).unwrap();
        for pair in all_pairs(&t) {
            let res = res_matrix(&pair).unwrap();
            let ind = ind_matrix(&pair).unwrap();
            let basis_h = IdempotentBasis::new(pair.table_h().clone()).unwrap();
            let w = normalizer_weights(&pair);
            let sh = pair.table_h().len();
            for l in 0..t.len() {
                let lhs_vec = basis_h.coordinates(&res.apply_rational(basis_g.idempotent(l)).unwrap()).unwrap();
                for k in 0..sh {
                    let ind_e = ind.apply_rational(basis_h.idempotent(k)).unwrap();
                    let ind_coords = basis_g.coordinates(&ind_e).unwrap();
                    let mut want = vec![BigRational::zero(); t.len()];
                    want[pair.g_class_of_h_class(k)] = BigRational::from_integer(w[k].into());
                    assert_eq!(ind_coords, want, "{name} Qind(e_{k})");
                    let lhs = inner_product_h(&w, &lhs_vec, &unit(sh, k)).unwrap();
                    let rhs = inner_product_g(&unit(t.len(), l), &ind_coords).unwrap();
                    assert_eq!(lhs, rhs, "{name} L={l} K={k}");
                }
            }
        }
    }
}

#[test]
fn restriction_is_injective_on_the_image_of_induction() {
    for pair in pairs_up_to(24) {
        let res = res_matrix(&pair).unwrap();
        let ind = ind_matrix(&pair).unwrap();
        let composed = res.compose_after(&ind).unwrap();
        let r_ind = rank(&ind.to_rational());
        assert_eq!(rank(&composed.to_rational()), r_ind);
        let full = res.to_rational();
        let mut cols: Vec<usize> = (0..pair.table_h().len()).map(|k| pair.g_class_of_h_class(k)).collect();
        cols.sort();
        cols.dedup();
        let block: QMatrix = full.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        assert_eq!(rank(&block), cols.len());
        assert_eq!(cols.len(), r_ind);
    }
}

#[test]
fn kernel_has_no_nonnegative_vectors() {
    for pair in pairs_up_to(24) {
        let res = res_matrix(&pair).unwrap();
        let kernel = kernel_basis(&res);
        assert_eq!(kernel.is_empty(), pair.is_whole());
        assert_eq!(kernel.len() + rank(&res.to_rational()), pair.table_g().len());
        for v in kernel {
            let den = v.coeffs().iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
            let ints: Vec<BigInt> = v.coeffs().iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
            let iv = BurnsideVector::from_coeffs(v.table().clone(), ints).unwrap();
            assert!(res.apply(&iv).unwrap().is_zero());
            let (a, b) = nonneg_split(&iv);
            assert!(!a.is_zero() && !b.is_zero());
            assert_eq!(a.sub(&b).unwrap(), iv);
        }
    }
}

#[test]
fn unique_v_properties() {
    for pair in pairs_up_to(24) {
        let res = res_matrix(&pair).unwrap();
        let v = unique_v(&pair, &res).unwrap();
        let image = res.apply_rational(&v).unwrap();
        assert_eq!(image, RationalBurnsideVector::one(pair.table_h().clone()));
        // [G\G] - v is in the kernel. e^G_G - v is not: res e^G_G = 0 for proper H.
        let diff = RationalBurnsideVector::one(pair.table_g().clone()).sub(&v).unwrap();
        assert!(res.apply_rational(&diff).unwrap().is_zero());
        let derived = derived_subgroups(&pair).unwrap();
        let h_class = pair.table_g().class_of(pair.h()).unwrap();
        assert!(derived.contains(&h_class));
        if is_normal(pair.group(), pair.h()).unwrap() {
            assert_eq!(derived, vec![h_class]);
            let mut want = vec![BigRational::zero(); pair.table_g().len()];
            want[h_class] = q(1, pair.index() as i64);
            assert_eq!(v.coeffs(), &want[..]);
        }
    }
}

#[test]
fn induction_merges_only_g_conjugate_classes() {
    for pair in pairs_up_to(24) {
        let th = pair.table_h();
        let g = pair.group();
        for a in 0..th.len() {
            for b in 0..th.len() {
                let ka = pair.to_g(th.class(a).representative);
                let kb = pair.to_g(th.class(b).representative);
                let conj = (0..g.order()).any(|x| ka.conjugate(g, x) == *kb);
                assert_eq!(pair.g_class_of_h_class(a) == pair.g_class_of_h_class(b), conj);
            }
        }
    }
}

#[test]
fn class_counts_for_normal_examples() {
    let a4 = table("A4");
    let v4 = sub(a4.group(), &["(1,2)(3,4)", "(1,3)(2,4)"]);
    let p = SubgroupPair::new(a4.clone(), v4).unwrap();
    assert_eq!((a4.len(), p.table_h().len()), (5, 5));
    let big = table("A4xZ2");
    let h = sub(big.group(), &["(1,2)(3,4)", "(1,3)(2,4)", "(5,6)"]);
    let p = SubgroupPair::new(big.clone(), h).unwrap();
    assert_eq!((big.len(), p.table_h().len()), (12, 16));
    assert!(is_normal(p.group(), p.h()).unwrap());
}

#[test]
fn cyclic_prime_square_idempotents() {
    for name in ["Z4", "Z9", "Z25"] {
        let t = table(name);
        let ring = BurnsideRing::new(t.clone()).unwrap();
        let basis = IdempotentBasis::new(t.clone()).unwrap();
        for e in basis.vectors() {
            assert_eq!(&ring.multiply(e, e).unwrap(), e);
        }
    }
}
