//! Parsers for flag values.

use ats_core::gen::WeightMode;
pub use ats_core::graph::parse_ratio;

pub fn parse_weight_mode(s: &str) -> Result<WeightMode, String> {
    s.parse()
}

/// Comma-separated values with optional `a..b` ranges (inclusive).
pub fn parse_list<T>(s: &str) -> Result<Vec<T>, String>
where
    T: std::str::FromStr + Copy + Into<i128> + TryFrom<i128>,
{
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: T = a
                .parse()
                .map_err(|_| format!("bad range start in `{part}`"))?;
            let b: T = b
                .parse()
                .map_err(|_| format!("bad range end in `{part}`"))?;
            for x in a.into()..=b.into() {
                out.push(T::try_from(x).map_err(|_| format!("`{part}` out of range"))?);
            }
        } else {
            out.push(part.parse().map_err(|_| format!("bad value `{part}`"))?);
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}
