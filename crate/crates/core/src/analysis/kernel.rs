use rayon::prelude::*;

use crate::algebra::{AlgebraElement, Matrix};
use crate::error::{Error, Result};
use crate::phi::{tau_power_expand, Phi, PhiParams};
use crate::reps::{cyclic_rep, matrix_rep_from_images, BraidRep};
use crate::scalars::Scalar;
use crate::words::{BraidWord, SmWord};

/// Bounded search result for `Φ(τ_1^p σ_1^q) = 1` on two strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub p_max: u64,
    pub q_max: u64,
    /// Hits with `p >= 1`, sorted by `(p, |q|)`, positive `q` first on ties.
    pub hits: Vec<(u64, i64)>,
    /// Hits `(0, q)`, `q != 0`: braids `σ_1^q` in the kernel of `ρ` itself.
    pub braid_hits: Vec<i64>,
    pub minimal_generator: Option<(u64, i64)>,
    /// Whether every hit is a positive multiple of the minimal generator.
    /// Vacuously true when there are no hits.
    pub cyclic_ok: bool,
    /// Always true: absence of hits is evidence only within the bounds.
    pub bounded: bool,
}

fn order_key(&(p, q): &(u64, i64)) -> (u64, u64, bool) {
    (p, q.unsigned_abs(), q < 0)
}

impl KernelReport {
    /// Hits with `p = 0` go to `braid_hits`; `(0, 0)` is dropped.
    pub fn from_hits(p_max: u64, q_max: u64, hits: Vec<(u64, i64)>) -> Self {
        let (zero_row, mut hits): (Vec<_>, Vec<_>) = hits.into_iter().partition(|&(p, _)| p == 0);
        let mut braid_hits: Vec<i64> = zero_row.into_iter().map(|(_, q)| q).filter(|&q| q != 0).collect();
        braid_hits.sort_by_key(|&q| (q.unsigned_abs(), q < 0));
        braid_hits.dedup();
        hits.sort_by_key(order_key);
        hits.dedup();
        let minimal_generator = hits.first().copied();
        let mut report = Self { p_max, q_max, hits, braid_hits, minimal_generator, cyclic_ok: true, bounded: true };
        report.cyclic_ok = report.minimal_generator.is_none() || verify_cyclic_structure(&report).unwrap_or(false);
        report
    }
}

/// Every hit is `(m p, m q)` for the minimal generator `(p, q)` and some `m >= 1`.
pub fn verify_cyclic_structure(report: &KernelReport) -> Result<bool> {
    let (p, q) =
        report.minimal_generator.ok_or_else(|| Error::Precondition("kernel report has no minimal generator".into()))?;
    Ok(report.hits.iter().all(|&(r, s)| r % p == 0 && (r / p) as i64 * q == s))
}

fn sigma_powers<S: Scalar>(rep: &BraidRep<S>, q_max: u64) -> Result<Vec<AlgebraElement<S>>> {
    let q_max = q_max as i64;
    (-q_max..=q_max).map(|q| rep.eval(&BraidWord::sigma_power(2, 1, q))).collect()
}

/// Tests `Φ(τ_1^p σ_1^q)` for `0 <= p <= p_max`, `|q| <= q_max`, rows in parallel.
pub fn kernel_search_sm2<S: Scalar>(phi: &Phi<S>, p_max: u64, q_max: u64) -> Result<KernelReport> {
    let rep = phi.rep();
    if rep.n() != 2 {
        return Err(Error::StrandCountMismatch { expected: 2, got: rep.n() });
    }
    let b = rep.backend();
    let sig = sigma_powers(rep, q_max)?;
    let tau = phi.eval(&SmWord::tau_power(2, 1, 1))?;
    let mut tau_pows = Vec::with_capacity(p_max as usize + 1);
    tau_pows.push(b.one());
    for p in 1..=p_max as usize {
        tau_pows.push(b.mul(&tau_pows[p - 1], &tau)?);
    }
    let q_lo = -(q_max as i64);
    let cells: Vec<(u64, i64)> = tau_pows
        .par_iter()
        .enumerate()
        .map(|(p, tp)| -> Result<Vec<(u64, i64)>> {
            let mut row = Vec::new();
            for (k, sq) in sig.iter().enumerate() {
                let q = q_lo + k as i64;
                if (p, q) != (0, 0) && b.mul(tp, sq)?.is_identity() {
                    row.push((p as u64, q));
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(KernelReport::from_hits(p_max, q_max, cells))
}

/// Hits of the multinomial criterion: the image of `τ_1^p σ_1^q` when `ρ(σ_1) = d`.
pub fn scalar_kernel_report<S: Scalar>(params: &PhiParams<S>, d: &S, p_max: u64, q_max: u64) -> Result<KernelReport> {
    if !d.is_unit() {
        return Err(Error::NonUnit(d.to_string()));
    }
    let q_max_i = q_max as i64;
    let cells: Vec<(u64, i64)> = (0..=p_max)
        .into_par_iter()
        .map(|p| -> Result<Vec<(u64, i64)>> {
            let mut row = Vec::new();
            for q in -q_max_i..=q_max_i {
                if (p, q) != (0, 0) && tau_power_expand(params, d, p, q)?.is_one() {
                    row.push((p, q));
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(KernelReport::from_hits(p_max, q_max, cells))
}

/// Smallest `(p, q)`, `p >= 1`, with the multinomial sum equal to 1.
pub fn scalar_kernel_criterion<S: Scalar>(
    params: &PhiParams<S>,
    d: &S,
    p_max: u64,
    q_max: u64,
) -> Result<Option<(u64, i64)>> {
    Ok(scalar_kernel_report(params, d, p_max, q_max)?.minimal_generator)
}

/// True when no `ρ(σ_1^s)`, `1 <= s <= s_max`, is a scalar matrix.
pub fn nonscalar_power_check<S: Scalar>(rep: &BraidRep<S>, s_max: u64) -> Result<bool> {
    let m = match rep.sigma(1)? {
        AlgebraElement::Matrix(m) => m.clone(),
        _ => return Err(Error::BackendMismatch(format!("{} is not a matrix representation", rep.label()))),
    };
    let mut power = m.clone();
    for _ in 1..=s_max {
        if power.as_scalar().is_some() {
            return Ok(false);
        }
        power = power.mul(&m);
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop8Comparison {
    pub matrix: KernelReport,
    pub cyclic: KernelReport,
    pub equal: bool,
}

/// Kernel search with `σ_1 ↦ M` and with `σ_1 ↦ X` in `K[X] / (X^s - d_s)`.
pub fn prop8_compare<S: Scalar>(
    m: &Matrix<S>,
    s: usize,
    d_s: &S,
    params: &PhiParams<S>,
    p_max: u64,
    q_max: u64,
) -> Result<Prop8Comparison> {
    if m.as_scalar().is_some() {
        return Err(Error::Precondition(format!("{m} is a scalar matrix")));
    }
    if s == 0 || m.pow(s as u64) != Matrix::scalar(m.dim(), d_s.clone()) {
        return Err(Error::Precondition(format!("M^{s} != ({d_s}) I")));
    }
    if let Some(k) = (1..s).find(|&k| m.pow(k as u64).as_scalar().is_some()) {
        return Err(Error::Precondition(format!("M^{k} is already scalar; s = {s} is not minimal")));
    }
    let mat = Phi::new(matrix_rep_from_images(2, vec![m.clone()])?, params.clone())?;
    let cyc = Phi::new(cyclic_rep(s, d_s.clone())?, params.clone())?;
    let matrix = kernel_search_sm2(&mat, p_max, q_max)?;
    let cyclic = kernel_search_sm2(&cyc, p_max, q_max)?;
    let equal = matrix.hits == cyclic.hits && matrix.braid_hits == cyclic.braid_hits;
    Ok(Prop8Comparison { matrix, cyclic, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{burau_reduced, burau_unreduced, scalar_char};
    use crate::scalars::ScalarValue;
    use proptest::prelude::*;

    type V = ScalarValue;

    fn v(s: &str) -> V {
        s.parse().unwrap()
    }

    fn m() -> Matrix<V> {
        Matrix::from_rows(vec![vec![v("0"), v("-2")], vec![v("1"), v("0")]]).unwrap()
    }

    fn search(d: &str, params: PhiParams<V>, p_max: u64, q_max: u64) -> KernelReport {
        let phi = Phi::new(scalar_char(v(d), 2).unwrap(), params).unwrap();
        kernel_search_sm2(&phi, p_max, q_max).unwrap()
    }

    #[test]
    fn scalar_character_kernels() {
        let r = search("2", PhiParams::from_i64(2, 0, 0), 6, 12);
        assert_eq!(r.hits, (1..=6).map(|m| (m as u64, -2 * m)).collect::<Vec<_>>());
        assert_eq!(r.minimal_generator, Some((1, -2)));
        assert!(r.cyclic_ok && r.bounded && r.braid_hits.is_empty());

        let r = search("2", PhiParams::from_i64(1, 0, -3), 6, 12);
        assert_eq!(r.hits, vec![(2, 0), (4, 0), (6, 0)]);
        assert_eq!(r.minimal_generator, Some((2, 0)));
        assert!(verify_cyclic_structure(&r).unwrap());
    }

    #[test]
    fn birman_instance_has_no_hits() {
        let phi = Phi::new(burau_reduced::<V>(2).unwrap(), PhiParams::from_i64(1, -1, 0)).unwrap();
        let r = kernel_search_sm2(&phi, 4, 8).unwrap();
        assert!(r.hits.is_empty() && r.braid_hits.is_empty() && r.minimal_generator.is_none());
        assert!(r.cyclic_ok);
        assert!(verify_cyclic_structure(&r).is_err());
        let phi3 = Phi::new(burau_reduced::<V>(3).unwrap(), PhiParams::from_i64(1, -1, 0)).unwrap();
        assert!(kernel_search_sm2(&phi3, 1, 1).is_err());
    }

    #[test]
    fn braid_row_detects_unfaithful_rho() {
        let r = search("-1", PhiParams::from_i64(3, 0, 0), 2, 4);
        assert_eq!(r.braid_hits, vec![2, -2, 4, -4]);
    }

    #[test]
    fn cyclic_structure_examples() {
        let ok = KernelReport::from_hits(6, 12, vec![(1, -2), (2, -4), (3, -6)]);
        assert!(verify_cyclic_structure(&ok).unwrap());
        let ok = KernelReport::from_hits(6, 12, vec![(2, 0), (4, 0)]);
        assert!(verify_cyclic_structure(&ok).unwrap());
        let bad = KernelReport::from_hits(6, 12, vec![(2, 0), (3, 0)]);
        assert!(!verify_cyclic_structure(&bad).unwrap());
        assert!(!bad.cyclic_ok);
    }

    #[test]
    fn tie_breaking() {
        let r = KernelReport::from_hits(3, 3, vec![(2, -1), (1, -3), (1, 3), (0, 2)]);
        assert_eq!(r.minimal_generator, Some((1, 3)));
        assert_eq!(r.hits, vec![(1, 3), (1, -3), (2, -1)]);
        assert_eq!(r.braid_hits, vec![2]);
    }

    #[test]
    fn nonscalar_powers() {
        assert!(nonscalar_power_check(&burau_unreduced::<V>(2).unwrap(), 8).unwrap());
        let twisted = matrix_rep_from_images(2, vec![m()]).unwrap();
        assert!(!nonscalar_power_check(&twisted, 2).unwrap());
        assert!(nonscalar_power_check(&twisted, 1).unwrap());
        let ident = matrix_rep_from_images(2, vec![Matrix::<V>::identity(2)]).unwrap();
        assert!(!nonscalar_power_check(&ident, 1).unwrap());
        let perm = crate::reps::permutation_rep::<V>(2).unwrap();
        assert!(nonscalar_power_check(&perm, 2).is_err());
    }

    #[test]
    fn scalar_criterion_examples() {
        assert_eq!(scalar_kernel_criterion(&PhiParams::from_i64(2, 0, 0), &v("2"), 6, 12).unwrap(), Some((1, -2)));
        assert_eq!(scalar_kernel_criterion(&PhiParams::from_i64(1, 0, -3), &v("2"), 6, 12).unwrap(), Some((2, 0)));
        assert_eq!(scalar_kernel_criterion(&PhiParams::from_i64(1, -1, 0), &v("-t"), 6, 12).unwrap(), None);
        assert!(scalar_kernel_criterion(&PhiParams::from_i64(1, -1, 0), &v("1 + t"), 1, 1).is_err());
    }

    #[test]
    fn cyclic_quotient_examples() {
        let r = prop8_compare(&m(), 2, &v("-2"), &PhiParams::from_i64(1, 2, 1), 5, 6).unwrap();
        assert!(r.equal);
        assert_eq!(r.matrix.minimal_generator, Some((1, 0)));
        let r = prop8_compare(&m(), 2, &v("-2"), &PhiParams::from_i64(1, -1, 0), 5, 6).unwrap();
        assert!(r.equal && r.matrix.hits.is_empty());
        let r = prop8_compare(&m(), 2, &v("-2"), &PhiParams::from_i64(0, 0, 1), 5, 6).unwrap();
        assert!(r.equal && r.cyclic.hits.contains(&(1, 0)));
        assert!(prop8_compare(&m(), 2, &v("2"), &PhiParams::from_i64(1, 2, 1), 1, 1).is_err());
        assert!(prop8_compare(&Matrix::scalar(2, v("2")), 1, &v("2"), &PhiParams::from_i64(1, 2, 1), 1, 1).is_err());
        assert!(prop8_compare(&m(), 4, &v("4"), &PhiParams::from_i64(1, 2, 1), 1, 1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn criterion_matches_search(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, di in 0usize..4) {
            let d = ["2", "1/2", "-1", "-t"][di];
            let params = PhiParams::<V>::from_i64(a, b, c);
            let search = search(d, params.clone(), 4, 6);
            let crit = scalar_kernel_report(&params, &v(d), 4, 6).unwrap();
            prop_assert_eq!(&search, &crit);
            for &(p1, q1) in &search.hits {
                for &(p2, q2) in &search.hits {
                    if p1 + p2 <= 4 && (q1 + q2).abs() <= 6 {
                        prop_assert!(search.hits.contains(&(p1 + p2, q1 + q2)));
                    }
                }
            }
        }
    }
}
