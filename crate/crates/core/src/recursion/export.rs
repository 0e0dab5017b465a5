//! CSV export of sequence terms.

use std::io::Write;

use crate::arith::{Interval, Sign};
use crate::error::Result;

/// Rows `n,value,sign` with `value` the interval midpoint to `digits`
/// significant digits and `sign` the certified sign.
pub fn write_sequence_csv<W: Write>(w: W, terms: &[(usize, Interval)], digits: usize) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["n", "value", "sign"])?;
    for (n, v) in terms {
        let sign = match v.certified_sign() {
            Sign::Positive => "+",
            Sign::Negative => "-",
            Sign::Unknown => "?",
        };
        let mid = v.midpoint().to_decimal(digits);
        out.write_record([n.to_string(), mid, sign.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Precision};
    use crate::methods::catalog;
    use crate::recursion::eval_mu_interval;

    #[test]
    fn csv_rows() {
        let m = catalog("bdf1").unwrap();
        let v = eval_mu_interval(&m, &rat(1, 1), 3, Precision::digits(20).unwrap()).unwrap();
        let terms: Vec<_> = v.into_iter().enumerate().collect();
        let mut buf = Vec::new();
        write_sequence_csv(&mut buf, &terms, 6).unwrap();
        let s = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = s.lines().collect();
        assert_eq!(lines[0], "n,value,sign");
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("0,5") && lines[1].ends_with(",+"), "{}", lines[1]);
    }
}
