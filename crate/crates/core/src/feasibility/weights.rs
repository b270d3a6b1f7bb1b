//! The weight functions `f`, `g1`, `g2`, `g3` that express an eigenvalue
//! multiplicity through `z = cos(phi)` where `theta = -2 s cos(phi)`.

#[allow(unused_imports)]
use num_traits::Float;

use crate::ParameterError;

/// Selects one of the three `g` weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GWeight {
    /// Coupling `s^(1-d)` with a `+` sign.
    G1,
    /// Coupling `(e/2) s^(1-d)` with a `-` sign.
    G2,
    /// Coupling `(e/2) s^(1-d)` with a `+` sign.
    G3,
}

fn check_open_unit(z: f64) -> Result<(), ParameterError> {
    if z.abs() < 1.0 {
        Ok(())
    } else {
        Err(ParameterError::ArgumentOutOfRange)
    }
}

/// `f(z) = 4 s^2 (1 - z^2) / (k^2 - 4 s^2 z^2)` with `s^2 = k - 1`.
pub fn f_weight(k: u32, z: f64) -> Result<f64, ParameterError> {
    crate::polynomials::check_degree(k)?;
    check_open_unit(z)?;
    let s2 = f64::from(k) - 1.0;
    let k = f64::from(k);
    let z2 = z * z;
    Ok(4.0 * s2 * (1.0 - z2) / (k * k - 4.0 * s2 * z2))
}

/// `g(z) = k(k-1)(r + sigma c z) / (d r + sigma c z)` where
/// `r = sqrt(1 - c^2 (1 - z^2))`, with coupling `c` and sign `sigma` chosen
/// by `which`.
pub fn g_weight(which: GWeight, k: u32, d: u32, e: u32, z: f64) -> Result<f64, ParameterError> {
    crate::polynomials::check_degree(k)?;
    check_open_unit(z)?;
    let s = (f64::from(k) - 1.0).sqrt();
    let t = s.powi(1 - d as i32);
    let half_e = f64::from(e) / 2.0;
    let (coupling, sign) = match which {
        GWeight::G1 => (t, 1.0),
        GWeight::G2 => (half_e * t, -1.0),
        GWeight::G3 => (half_e * t, 1.0),
    };
    if coupling * coupling >= 1.0 {
        return Err(ParameterError::RegimeViolation { radicand: 1.0 - coupling * coupling });
    }
    let radicand = 1.0 - coupling * coupling * (1.0 - z * z);
    if radicand <= 0.0 {
        return Err(ParameterError::RegimeViolation { radicand });
    }
    let r = radicand.sqrt();
    let kf = f64::from(k);
    let shift = sign * coupling * z;
    Ok(kf * (kf - 1.0) * (r + shift) / (f64::from(d) * r + shift))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_examples() {
        assert!((f_weight(4, 0.0).unwrap() - 0.75).abs() < 1e-15);
        for &z in &[0.1, 0.37, 0.9] {
            assert_eq!(f_weight(5, z).unwrap(), f_weight(5, -z).unwrap());
        }
        assert!(f_weight(6, 1.0 - 1e-12).unwrap() < 1e-10);
        assert_eq!(f_weight(4, 1.0), Err(ParameterError::ArgumentOutOfRange));
        assert_eq!(f_weight(4, -1.5), Err(ParameterError::ArgumentOutOfRange));
    }

    #[test]
    fn g1_hand_value() {
        // radicand 1 - (1/9)(2/3) = 25/27 at k = 4, d = 3, z = 1/sqrt(3).
        let z = 1.0 / 3f64.sqrt();
        assert!((g_weight(GWeight::G1, 4, 3, 2, z).unwrap() - 4.5).abs() < 1e-12);
    }

    #[test]
    fn g2_and_g3_coincide_at_zero() {
        for &(k, d, e) in &[(4, 3, 2), (6, 5, 4), (9, 7, 6)] {
            let a = g_weight(GWeight::G2, k, d, e, 0.0).unwrap();
            let b = g_weight(GWeight::G3, k, d, e, 0.0).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn regime_violation_reported() {
        // k = 3, d = 3, e = 6 gives (e/2) s^(1-d) = 3/2.
        assert!(matches!(
            g_weight(GWeight::G2, 3, 3, 6, 0.2),
            Err(ParameterError::RegimeViolation { .. })
        ));
    }
}
