//! Single-qubit mixed states in Bloch and spectral form.
//!
//! Pauli matrices use the standard basis with `σ_z = diag(1, -1)`, so spin up
//! is basis state 0 and `ρ = (I + x σ_x + y σ_y + z σ_z) / 2`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{HermitianOperator, MAX_DIM};

/// Bloch lengths in `(1, 1 + PHYSICAL_TOL]` are renormalized onto the sphere.
pub const PHYSICAL_TOL: f64 = 1e-12;

/// Largest copy count for dense tensor powers (`2^12 = 4096`).
pub const MAX_TENSOR_POWER: usize = 12;

/// Bloch vectors whose cross product is below this are treated as commuting.
const COMMUTE_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochQubit {
    bloch: [f64; 3],
}

impl BlochQubit {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_array([x, y, z])
    }

    pub fn from_array(bloch: [f64; 3]) -> Result<Self> {
        if bloch.iter().any(|c| !c.is_finite()) {
            return Err(Error::Unphysical(f64::NAN));
        }
        let len = norm(bloch);
        if len > 1.0 + PHYSICAL_TOL {
            return Err(Error::Unphysical(len));
        }
        let bloch = if len > 1.0 { scale(bloch, 1.0 / len) } else { bloch };
        Ok(BlochQubit { bloch })
    }

    /// State with Bloch vector `(0, 0, r)`.
    pub fn along_z(r: f64) -> Result<Self> {
        Self::new(0.0, 0.0, r)
    }

    pub fn maximally_mixed() -> Self {
        BlochQubit { bloch: [0.0; 3] }
    }

    pub fn bloch(&self) -> [f64; 3] {
        self.bloch
    }

    /// Euclidean length `r` of the Bloch vector.
    pub fn length(&self) -> f64 {
        norm(self.bloch)
    }

    /// Same direction, length multiplied by `factor` (expected in `[0, 1]`).
    pub(crate) fn shrink(&self, factor: f64) -> Result<Self> {
        Self::from_array(scale(self.bloch, factor))
    }

    /// The 2x2 density operator.
    pub fn to_operator(&self) -> HermitianOperator {
        let [x, y, z] = self.bloch;
        HermitianOperator::from_entries_unchecked(
            2,
            vec![
                Complex64::new(0.5 * (1.0 + z), 0.0),
                Complex64::new(0.5 * x, -0.5 * y),
                Complex64::new(0.5 * x, 0.5 * y),
                Complex64::new(0.5 * (1.0 - z), 0.0),
            ],
        )
    }

    /// Reads the Bloch vector off a 2x2 density operator.
    pub fn from_operator(op: &HermitianOperator) -> Result<Self> {
        if op.dim() != 2 {
            return Err(Error::Config(format!("expected a 2x2 operator, got {0}x{0}", op.dim())));
        }
        let off = op.get(0, 1);
        Self::new(2.0 * off.re, -2.0 * off.im, op.get(0, 0).re - op.get(1, 1).re)
    }

    /// `((1 + r)/2, (1 - r)/2)`, largest first.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let r = self.length();
        (0.5 * (1.0 + r), 0.5 * (1.0 - r))
    }
}

/// Qubit in its own eigenbasis: weight `a` on spin up, `b` on spin down.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralQubit {
    a: f64,
    b: f64,
}

impl SpectralQubit {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let ok = a.is_finite()
            && b.is_finite()
            && (a + b - 1.0).abs() <= 1e-14
            && b >= 0.0
            && a >= b
            && a <= 1.0;
        if !ok {
            return Err(Error::InvalidSpectrum { a, b });
        }
        Ok(SpectralQubit { a, b })
    }

    /// Spin-up weight `a`; `b = 1 - a`.
    pub fn from_up_weight(a: f64) -> Result<Self> {
        Self::new(a, 1.0 - a)
    }

    pub fn from_bloch(state: &BlochQubit) -> Self {
        let (a, b) = state.eigenvalues();
        SpectralQubit { a, b }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Bloch vector `(0, 0, a - b)`.
    pub fn to_bloch(&self) -> BlochQubit {
        BlochQubit {
            bloch: [0.0, 0.0, self.a - self.b],
        }
    }
}

pub fn eigenvalues_qubit(state: &BlochQubit) -> (f64, f64) {
    state.eigenvalues()
}

/// Uhlmann–Jozsa fidelity `[Tr √(√ρ ζ √ρ)]²`.
///
/// Commuting pairs (collinear Bloch vectors) use the two-eigenvalue closed
/// form. Other pairs use `(1 + r·p + √((1 - r²)(1 - p²))) / 2`, which stays
/// accurate for rank-deficient states where [`fidelity_general`] loses about
/// half the digits to square roots of rounding-level eigenvalues.
pub fn fidelity(rho: &BlochQubit, zeta: &BlochQubit) -> f64 {
    match commuting_projections(rho, zeta) {
        Some((r, p)) => {
            let root = ((1.0 + r) * (1.0 + p)).max(0.0).sqrt() + ((1.0 - r) * (1.0 - p)).max(0.0).sqrt();
            (0.25 * root * root).clamp(0.0, 1.0)
        }
        None => {
            let (r, p) = (rho.length(), zeta.length());
            let mixed = ((1.0 - r * r) * (1.0 - p * p)).max(0.0).sqrt();
            (0.5 * (1.0 + dot(rho.bloch, zeta.bloch) + mixed)).clamp(0.0, 1.0)
        }
    }
}

/// Fidelity through explicit matrix square roots.
pub fn fidelity_general(rho: &BlochQubit, zeta: &BlochQubit) -> f64 {
    let sqrt_rho = rho
        .to_operator()
        .eigen()
        .expect("2x2 is within the dimension cap")
        .map_spectrum(|l| l.max(0.0).sqrt());
    let inner = sqrt_rho
        .sandwich(&zeta.to_operator())
        .expect("dimensions match");
    let root: f64 = inner
        .eigenvalues()
        .expect("2x2 is within the dimension cap")
        .iter()
        .map(|l| l.max(0.0).sqrt())
        .sum();
    (root * root).clamp(0.0, 1.0)
}

/// If the Bloch vectors are collinear, their signed components along a
/// common axis.
fn commuting_projections(rho: &BlochQubit, zeta: &BlochQubit) -> Option<(f64, f64)> {
    let (r, p) = (rho.bloch, zeta.bloch);
    let axis = if norm(r) >= norm(p) { r } else { p };
    let len = norm(axis);
    if len < COMMUTE_TOL {
        return Some((0.0, 0.0));
    }
    if norm(cross(r, p)) > COMMUTE_TOL {
        return None;
    }
    let unit = scale(axis, 1.0 / len);
    Some((dot(r, unit), dot(p, unit)))
}

pub fn trace_norm(op: &HermitianOperator) -> Result<f64> {
    op.trace_norm()
}

fn check_copies(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::out_of_range("k", 0.0, "[1, 12]"));
    }
    if k > MAX_TENSOR_POWER {
        return Err(Error::ResourceCap(format!(
            "{k} copies exceed the dense cap of {MAX_TENSOR_POWER} (dimension {MAX_DIM})"
        )));
    }
    Ok(())
}

/// `state^{⊗k}` as a dense `2^k`-dimensional operator.
pub fn tensor_power(state: &BlochQubit, k: usize) -> Result<HermitianOperator> {
    check_copies(k)?;
    let single = state.to_operator();
    let mut out = single.clone();
    for _ in 1..k {
        out = out.kron(&single);
    }
    Ok(out)
}

/// `rho^{⊗k} - zeta^{⊗k}` built entrywise, so only one `2^k` matrix is held.
pub fn tensor_power_difference(rho: &BlochQubit, zeta: &BlochQubit, k: usize) -> Result<HermitianOperator> {
    check_copies(k)?;
    let (ro, zo) = (rho.to_operator(), zeta.to_operator());
    let dim = 1usize << k;
    let mut entries = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut pr = Complex64::new(1.0, 0.0);
            let mut pz = Complex64::new(1.0, 0.0);
            for t in (0..k).rev() {
                let (bi, bj) = ((i >> t) & 1, (j >> t) & 1);
                pr *= ro.get(bi, bj);
                pz *= zo.get(bi, bj);
            }
            entries.push(pr - pz);
        }
    }
    Ok(HermitianOperator::from_entries_unchecked(dim, entries))
}

#[inline]
pub(crate) fn norm(v: [f64; 3]) -> f64 {
    dot(v, v).sqrt()
}

#[inline]
pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
fn scale(v: [f64; 3], f: f64) -> [f64; 3] {
    [v[0] * f, v[1] * f, v[2] * f]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(r: f64) -> BlochQubit {
        BlochQubit::along_z(r).unwrap()
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalues_qubit(&z(0.0)), (0.5, 0.5));
        assert_eq!(eigenvalues_qubit(&z(1.0)), (1.0, 0.0));
        let (l, lt) = eigenvalues_qubit(&z(0.3));
        assert!((l - 0.65).abs() < 1e-15 && (lt - 0.35).abs() < 1e-15);
    }

    #[test]
    fn physicality_guard() {
        assert!(matches!(BlochQubit::new(0.0, 0.0, 1.0 + 1e-9), Err(Error::Unphysical(_))));
        let nudged = BlochQubit::new(0.6, 0.0, 0.8 + 5e-13).unwrap();
        assert!(nudged.length() <= 1.0);
        assert!(BlochQubit::new(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn operator_round_trip() {
        let q = BlochQubit::new(0.3, -0.4, 0.5).unwrap();
        let back = BlochQubit::from_operator(&q.to_operator()).unwrap();
        for (a, b) in q.bloch().iter().zip(back.bloch()) {
            assert!((a - b).abs() <= 1e-14);
        }
    }

    #[test]
    fn spectral_validation() {
        assert!(SpectralQubit::new(0.4, 0.6).is_err());
        assert!(SpectralQubit::new(0.7, 0.4).is_err());
        assert!(SpectralQubit::new(1.0, 0.0).is_ok());
        let s = SpectralQubit::from_bloch(&BlochQubit::new(0.0, 0.6, 0.0).unwrap());
        assert!((s.a() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn fidelity_examples() {
        let q = BlochQubit::new(0.1, 0.2, -0.3).unwrap();
        assert!((fidelity(&q, &q) - 1.0).abs() < 1e-12);
        assert!((fidelity_general(&q, &q) - 1.0).abs() < 1e-12);
        assert!(fidelity(&z(1.0), &z(-1.0)).abs() < 1e-15);
        let expected = ((0.8f64 * 0.6).sqrt() + (0.2f64 * 0.4).sqrt()).powi(2);
        assert!((fidelity(&z(0.6), &z(0.2)) - expected).abs() < 1e-14);
        assert!((fidelity_general(&z(0.6), &z(0.2)) - expected).abs() < 1e-12);
        assert!((expected - 0.951918).abs() < 1e-6);
    }

    #[test]
    fn general_pairs_agree_across_routes() {
        let pairs = [
            (BlochQubit::new(0.3, -0.2, 0.5).unwrap(), BlochQubit::new(-0.4, 0.1, 0.2).unwrap()),
            (BlochQubit::new(0.0, 0.7, 0.0).unwrap(), z(0.5)),
            (BlochQubit::new(0.6, 0.0, 0.8).unwrap(), BlochQubit::new(0.0, -0.3, 0.1).unwrap()),
        ];
        for (a, b) in pairs {
            assert!((fidelity(&a, &b) - fidelity_general(&a, &b)).abs() < 1e-7);
            assert!((fidelity(&a, &b) - fidelity(&b, &a)).abs() < 1e-15);
        }
    }

    #[test]
    fn antiparallel_pairs_take_the_closed_form() {
        let f = fidelity(&z(0.5), &z(-0.5));
        let g = fidelity_general(&z(0.5), &z(-0.5));
        assert!((f - g).abs() < 1e-12);
        assert!((f - 0.75).abs() < 1e-14);
    }

    #[test]
    fn trace_norm_of_qubit_difference() {
        let d = z(0.6).to_operator().sub(&z(0.2).to_operator()).unwrap();
        assert!((trace_norm(&d).unwrap() - 0.4).abs() < 1e-14);
    }

    #[test]
    fn tensor_power_examples() {
        let q = BlochQubit::new(0.2, 0.1, 0.4).unwrap();
        assert_eq!(tensor_power(&q, 1).unwrap(), q.to_operator());
        let mixed = tensor_power(&BlochQubit::maximally_mixed(), 2).unwrap();
        assert_eq!(mixed, HermitianOperator::from_diagonal(&[0.25; 4]));
        let r = 0.3;
        let t = tensor_power(&z(r), 2).unwrap();
        let want = [(1.0 + r) * (1.0 + r) / 4.0, (1.0 - r * r) / 4.0, (1.0 - r * r) / 4.0, (1.0 - r) * (1.0 - r) / 4.0];
        for (i, w) in want.iter().enumerate() {
            assert!((t.get(i, i).re - w).abs() < 1e-15);
        }
        assert!(t.hermiticity_deviation() == 0.0);
    }

    #[test]
    fn tensor_power_bounds() {
        let q = z(0.5);
        assert!(matches!(tensor_power(&q, 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(tensor_power(&q, 13), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn difference_matches_kron_route() {
        let (a, b) = (BlochQubit::new(0.3, 0.1, -0.2).unwrap(), BlochQubit::new(-0.1, 0.5, 0.4).unwrap());
        let direct = tensor_power_difference(&a, &b, 3).unwrap();
        let via_kron = tensor_power(&a, 3).unwrap().sub(&tensor_power(&b, 3).unwrap()).unwrap();
        for (x, y) in direct.entries().iter().zip(via_kron.entries()) {
            assert!((x - y).norm() < 1e-15);
        }
    }
}
