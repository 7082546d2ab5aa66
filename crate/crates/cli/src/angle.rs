//! Angle literals: decimal radians or rational multiples of π
//! (`pi`, `pi/b`, `a*pi`, `a*pi/b`).

use std::f64::consts::PI;

use hypvol_core::Error;

fn number(text: &str, offset: usize) -> Result<f64, Error> {
    let trimmed = text.trim();
    match trimmed.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::Parse {
            position: offset,
            message: format!("`{trimmed}` is not a finite number"),
        }),
    }
}

pub fn parse_angle(text: &str) -> Result<f64, Error> {
    let lower = text.trim().to_ascii_lowercase().replace('π', "pi");
    let Some(at) = lower.find("pi") else {
        return number(&lower, 0);
    };
    let (head, tail) = (&lower[..at], &lower[at + 2..]);
    let factor = if head.trim().is_empty() {
        1.0
    } else {
        let Some(coeff) = head.trim_end().strip_suffix('*') else {
            return Err(Error::Parse {
                position: at,
                message: format!("expected `*` before pi in `{text}`"),
            });
        };
        number(coeff, 0)?
    };
    let divisor = if tail.trim().is_empty() {
        1.0
    } else {
        let Some(denom) = tail.trim_start().strip_prefix('/') else {
            return Err(Error::Parse {
                position: at + 2,
                message: format!("expected `/` after pi in `{text}`"),
            });
        };
        let d = number(denom, at + 3)?;
        if d == 0.0 {
            return Err(Error::Parse {
                position: at + 3,
                message: "division by zero".to_string(),
            });
        }
        d
    };
    Ok(factor * PI / divisor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn forms() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/3").unwrap(), PI / 3.0);
        assert_eq!(parse_angle("2*pi/3").unwrap(), 2.0 * PI / 3.0);
        assert_eq!(parse_angle(" 0.5 * pi ").unwrap(), 0.5 * PI);
        assert_eq!(parse_angle("π/2").unwrap(), PI / 2.0);
        assert_eq!(parse_angle("1.25").unwrap(), 1.25);
        assert_eq!(parse_angle("0").unwrap(), 0.0);
    }

    #[test]
    fn decimal_form_is_identical() {
        assert_eq!(parse_angle("pi/4").unwrap(), parse_angle("0.78539816339744831").unwrap());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "pie", "2pi", "pi/", "pi/0", "x*pi", "nan", "inf", "pi*2", "1..2"] {
            assert!(matches!(parse_angle(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn rational_multiples(a in 1u32..50, b in 1u32..50) {
            let v = parse_angle(&format!("{a}*pi/{b}")).unwrap();
            prop_assert!((v - a as f64 * PI / b as f64).abs() < 1e-15);
        }

        #[test]
        fn decimals_round_trip(x in 0.0f64..4.0) {
            prop_assert_eq!(parse_angle(&format!("{x:?}")).unwrap(), x);
        }
    }
}
