//! Command-line front end for `cyclicity-core`.

pub mod family;
pub mod output;
pub mod range;
pub mod spec_lang;

use std::fmt;

/// A malformed command line or parameter, reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Exit status for an error: 3 when a resource cap was hit, 2 otherwise.
pub fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<cyclicity_core::Error>() {
        Some(cyclicity_core::Error::Resource { .. }) => 3,
        _ => 2,
    }
}

/// Parses an unsigned integer, also accepting `1e6` and `1_000_000`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    let t = s.trim().replace('_', "");
    if let Some((mant, exp)) = t.split_once(['e', 'E']) {
        let mant: u64 = mant.parse().map_err(|_| format!("not an integer: {s}"))?;
        let exp: u32 = exp.parse().map_err(|_| format!("not an integer: {s}"))?;
        return 10u64
            .checked_pow(exp)
            .and_then(|p| p.checked_mul(mant))
            .ok_or_else(|| format!("integer out of range: {s}"));
    }
    t.parse().map_err(|_| format!("not an integer: {s}"))
}
