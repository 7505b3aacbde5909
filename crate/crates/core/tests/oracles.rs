//! Cross-checks against independent oracles: slower, structurally
//! different computations of the same quantities, plus a set of values
//! derived by hand. The library must agree with all of them without
//! having been tuned to any of them.

use num_complex::Complex64;
use premeasure::entangle::{negative_eigenvalue_sum, negativity};
use premeasure::linalg::{
    hermitian_eig, kron, matrix_exp_antihermitian, partial_trace, partial_transpose,
    ComplexMatrix, Subsystem,
};
use premeasure::measures::{mixedness, skew_information};
use premeasure::qubit_analytic::{
    mixedness_closed_form, negativity_closed_form, negativity_geometric,
    premeasurement_state_explicit, skew_closed_form_cartesian, skew_closed_form_spherical,
};
use premeasure::rng::SplitMix64;
use premeasure::states::{
    density_from_bloch, random_density_with, random_hermitian, spherical_to_cartesian,
    BlochVector, Observable, SphericalBloch,
};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

/// Characteristic polynomial coefficients via the Faddeev–LeVerrier
/// recurrence: p(λ) = λ^n + c₁λ^{n-1} + … + c_n.
fn char_poly(m: &ComplexMatrix) -> Vec<Complex64> {
    let n = m.rows();
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    let mut mk = m.clone();
    for k in 1..=n {
        let ck = -mk.trace() / k as f64;
        coeffs.push(ck);
        if k < n {
            let shifted = &mk + &ComplexMatrix::identity(n).scale(ck);
            mk = m.matmul(&shifted);
        }
    }
    coeffs
}

fn eval_poly(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Durand–Kerner root finder: all roots of a monic polynomial at once,
/// no eigendecomposition anywhere in the path.
fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..degree).map(|i| seed.powu(i as u32 + 1)).collect();
    for _ in 0..2000 {
        let mut shift = 0.0f64;
        for i in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let delta = eval_poly(coeffs, roots[i]) / denom;
            roots[i] -= delta;
            shift = shift.max(delta.norm());
        }
        if shift < 1e-14 {
            break;
        }
    }
    roots
}

/// Eigenvalues through the characteristic polynomial, sorted ascending.
/// Only reliable for simple spectra: Durand–Kerner loses half its
/// digits on multiple roots, so degenerate cases are cross-checked at
/// the coefficient level with [`poly_from_roots`] instead.
fn eigenvalues_by_roots(m: &ComplexMatrix) -> Vec<f64> {
    let roots = durand_kerner(&char_poly(m));
    let mut values: Vec<f64> = roots.iter().map(|z| z.re).collect();
    for z in &roots {
        // Hermitian input: every root must be essentially real.
        assert!(z.im.abs() < 1e-9, "non-real root {z} for Hermitian input");
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values
}

/// Monic polynomial with the given real roots, coefficients in the same
/// descending-power layout as [`char_poly`].
fn poly_from_roots(roots: &[f64]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k] += c;
            next[k + 1] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

fn assert_same_poly(a: &[Complex64], b: &[Complex64], tol: f64) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        assert!(
            (x - y).norm() <= tol * x.norm().max(1.0),
            "coefficient mismatch {x} vs {y}"
        );
    }
}

/// Matrix exponential exp(-itH) by scaling, Taylor series, squaring.
fn expm_power_series(h: &ComplexMatrix, t: f64) -> ComplexMatrix {
    let n = h.rows();
    let a = h.scale(Complex64::new(0.0, -t));
    let scale_pow = {
        let norm = a.frobenius_norm();
        let mut s = 0u32;
        while norm / (1u64 << s) as f64 > 0.25 {
            s += 1;
        }
        s
    };
    let scaled = a.scale(Complex64::new(1.0 / (1u64 << scale_pow) as f64, 0.0));
    let mut result = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..40 {
        term = term.matmul(&scaled).scale(Complex64::new(1.0 / k as f64, 0.0));
        result = &result + &term;
        if term.max_abs() < 1e-20 {
            break;
        }
    }
    for _ in 0..scale_pow {
        result = result.matmul(&result);
    }
    result
}

/// Partial trace by explicit basis-vector contraction:
/// Tr_B(M)[i][j] = Σ_k ⟨i⊗k|M|j⊗k⟩, computed through actual kets.
fn partial_trace_by_contraction(
    m: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    traced: Subsystem,
) -> ComplexMatrix {
    let (keep, summed) = match traced {
        Subsystem::B => (dim_a, dim_b),
        Subsystem::A => (dim_b, dim_a),
    };
    ComplexMatrix::from_fn(keep, keep, |i, j| {
        let mut total = Complex64::new(0.0, 0.0);
        for k in 0..summed {
            let (row_ket, col_ket) = match traced {
                Subsystem::B => (
                    kron(&ComplexMatrix::basis_ket(dim_a, i), &ComplexMatrix::basis_ket(dim_b, k)),
                    kron(&ComplexMatrix::basis_ket(dim_a, j), &ComplexMatrix::basis_ket(dim_b, k)),
                ),
                Subsystem::A => (
                    kron(&ComplexMatrix::basis_ket(dim_a, k), &ComplexMatrix::basis_ket(dim_b, i)),
                    kron(&ComplexMatrix::basis_ket(dim_a, k), &ComplexMatrix::basis_ket(dim_b, j)),
                ),
            };
            total += row_ket.adjoint().matmul(m).matmul(&col_ket)[(0, 0)];
        }
        total
    })
}

#[test]
fn jacobi_eigenvalues_match_characteristic_polynomial_roots() {
    let mut rng = SplitMix64::new(41);
    for _ in 0..60 {
        let dim = 2 + (rng.next_u64() % 3) as usize;
        let m = random_hermitian(&mut rng, dim);
        let via_jacobi = hermitian_eig(&m).unwrap().eigenvalues;
        let via_roots = eigenvalues_by_roots(&m);
        for (a, b) in via_jacobi.iter().zip(&via_roots) {
            assert!(
                (a - b).abs() <= 1e-10,
                "eigenvalue mismatch: jacobi {a}, roots {b}"
            );
        }
    }
}

#[test]
fn spectral_exponential_matches_power_series() {
    let mut rng = SplitMix64::new(42);
    for _ in 0..40 {
        let dim = 2 + (rng.next_u64() % 5) as usize;
        let h = random_hermitian(&mut rng, dim);
        let t = rng.next_in_range(0.0, 3.0);
        let spectral = matrix_exp_antihermitian(&h, t).unwrap();
        let series = expm_power_series(&h, t);
        assert!(
            spectral.max_abs_diff(&series) <= 1e-10,
            "expm mismatch {:.3e}",
            spectral.max_abs_diff(&series)
        );
    }
}

#[test]
fn partial_trace_matches_basis_contraction() {
    let mut rng = SplitMix64::new(43);
    for k in 0..30 {
        let (da, db) = if k % 2 == 0 { (2, 3) } else { (3, 2) };
        let m = random_hermitian(&mut rng, da * db);
        for traced in [Subsystem::A, Subsystem::B] {
            let fast = partial_trace(&m, da, db, traced).unwrap();
            let slow = partial_trace_by_contraction(&m, da, db, traced);
            assert!(fast.max_abs_diff(&slow) <= 1e-12);
        }
    }
}

#[test]
fn premeasured_partial_transpose_spectrum_matches_hand_derivation() {
    // For input Bloch vector (x, y, z), the partially transposed
    // premeasurement state has eigenvalues (1 ± z)/2 and ±|n_perp|/2;
    // worked out by hand from the explicit 4x4 form.
    let b = BlochVector::new(0.4, 0.3, 0.0).unwrap();
    let state = premeasurement_state_explicit(&b).unwrap();
    let pt = partial_transpose(state.matrix(), 2, 2, Subsystem::A).unwrap();
    let mut expected = vec![-0.25, 0.25, 0.5, 0.5];
    expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let got = hermitian_eig(&pt).unwrap().eigenvalues;
    for (g, e) in got.iter().zip(&expected) {
        assert!((g - e).abs() <= 1e-12, "PT spectrum {got:?} vs {expected:?}");
    }
    // Same spectrum at the characteristic-polynomial level; the double
    // root at 1/2 rules out the root-finder oracle here.
    assert_same_poly(&char_poly(&pt), &poly_from_roots(&expected), 1e-12);
}

#[test]
fn bell_state_partial_transpose_spectrum() {
    let b = BlochVector::new(1.0, 0.0, 0.0).unwrap();
    let state = premeasurement_state_explicit(&b).unwrap();
    let pt = partial_transpose(state.matrix(), 2, 2, Subsystem::A).unwrap();
    let got = hermitian_eig(&pt).unwrap().eigenvalues;
    let expected = [-0.5, 0.5, 0.5, 0.5];
    for (g, e) in got.iter().zip(&expected) {
        assert!((g - e).abs() <= 1e-12);
    }
    assert!((negativity(&state, 2, 2).unwrap() - 0.5).abs() <= 1e-12);
}

#[test]
fn frozen_reference_values_hold() {
    // Skew information of the tilted mixed state (0.4, 0.3, 0) measured
    // along sigma_z. Derived by hand: sqrt(rho) = a*1 + b*(nhat.sigma)
    // with b = (sqrt(l+) - sqrt(l-))/2, giving 4b^2 = 1 - sqrt(0.75)
    // times the transverse unit component, here 1.
    let b = BlochVector::new(0.4, 0.3, 0.0).unwrap();
    let sigma_z = Observable::new(premeasure::states::pauli_z()).unwrap();
    let rho = density_from_bloch(&b).unwrap();
    assert!((skew_information(&rho, &sigma_z).unwrap() - 0.1339745962155614).abs() <= 1e-13);
    assert!((skew_closed_form_cartesian(&b).unwrap() - 0.1339745962155614).abs() <= 1e-15);

    // Spherical-to-Cartesian at (0.5, pi/3, pi/4).
    let s = SphericalBloch::new(0.5, FRAC_PI_3, FRAC_PI_4).unwrap();
    let v = spherical_to_cartesian(&s);
    assert!((v.n_x - 0.30618621784789724).abs() <= 1e-15);
    assert!((v.n_y - 0.30618621784789724).abs() <= 1e-15);
    assert!((v.n_z - 0.25).abs() <= 1e-15);

    // Spherical skew at n = 0.8, theta = pi/3: (1 - 0.6) * 3/4 = 0.3.
    let s = SphericalBloch::new(0.8, FRAC_PI_3, 0.0).unwrap();
    assert!((skew_closed_form_spherical(&s) - 0.3).abs() <= 1e-15);

    // Negativity of the tilted premeasurement: |n_perp|/2 = 0.25.
    let b = BlochVector::new(0.4, 0.3, 0.0).unwrap();
    let state = premeasurement_state_explicit(&b).unwrap();
    assert!((negativity(&state, 2, 2).unwrap() - 0.25).abs() <= 1e-12);
    assert!((negative_eigenvalue_sum(&state, 2, 2).unwrap() - 0.25).abs() <= 1e-12);

    // Geometric direction formula: (0.6, 0, 0.8) measured along x gives
    // half of sqrt(1 - 0.36) = 0.4.
    let b = BlochVector::new(0.6, 0.0, 0.8).unwrap();
    assert!((negativity_geometric(&b, [1.0, 0.0, 0.0]).unwrap() - 0.4).abs() <= 1e-15);

    // Mixedness examples.
    assert!((mixedness_closed_form(0.5).unwrap() - 0.375).abs() <= 1e-15);
    let rho = density_from_bloch(&BlochVector::new(0.0, 0.25, 0.0).unwrap()).unwrap();
    assert!((mixedness(&rho) - 0.5 * (1.0 - 0.0625)).abs() <= 1e-14);

    // Central relation at (0.5, pi/2): closed-form negativity 0.25.
    let s = SphericalBloch::new(0.5, FRAC_PI_2, 0.0).unwrap();
    let skew = skew_closed_form_spherical(&s);
    let m = mixedness_closed_form(0.5).unwrap();
    assert!((negativity_closed_form(skew, m, 0.5).unwrap() - 0.25).abs() <= 1e-12);
}

#[test]
fn trace_norm_matches_root_finder_absolute_sum() {
    let mut rng = SplitMix64::new(44);
    for _ in 0..30 {
        let dim = 2 + (rng.next_u64() % 3) as usize;
        let m = random_hermitian(&mut rng, dim);
        let via_library = premeasure::linalg::trace_norm(&m).unwrap();
        let via_roots: f64 = eigenvalues_by_roots(&m).iter().map(|v| v.abs()).sum();
        assert!((via_library - via_roots).abs() <= 1e-9);
    }
}

#[test]
fn negativity_matches_root_finder_pipeline() {
    // Negativity recomputed entirely through the characteristic
    // polynomial of the partial transpose.
    let mut rng = SplitMix64::new(45);
    for _ in 0..25 {
        let rank = 1 + (rng.next_u64() % 4) as usize;
        let rho = random_density_with(&mut rng, 4, rank)
            .unwrap()
            .with_dims(vec![2, 2])
            .unwrap();
        let pt = partial_transpose(rho.matrix(), 2, 2, Subsystem::A).unwrap();
        let oracle: f64 = eigenvalues_by_roots(&pt)
            .iter()
            .filter(|v| **v < 0.0)
            .map(|v| -v)
            .sum();
        let library = negativity(&rho, 2, 2).unwrap();
        assert!(
            (library - oracle).abs() <= 1e-9,
            "negativity {library} vs root oracle {oracle}"
        );
    }
}

#[test]
fn pvm_projector_spectra_are_zero_one() {
    // A rank-r projector on dimension d has characteristic polynomial
    // λ^(d-r) (λ-1)^r; checked at the coefficient level because the
    // spectrum is maximally degenerate.
    let mut rng = SplitMix64::new(46);
    let x = Observable::new(random_hermitian(&mut rng, 3)).unwrap();
    let pvm = premeasure::states::pvm_from_observable(&x).unwrap();
    for p in pvm.projectors() {
        let rank = p.trace().re.round() as usize;
        let mut roots = vec![0.0; p.rows() - rank];
        roots.extend(std::iter::repeat(1.0).take(rank));
        assert_same_poly(&char_poly(p), &poly_from_roots(&roots), 1e-12);
    }
}
