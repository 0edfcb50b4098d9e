//! Text syntax for groups: `Cn`, `Cp^k`, `D<2m>`, `Q<2^n>`, `SD<2^n>`,
//! `M(p,n)`, `ZM(m,n,r)`, `S3`, and `x`-separated direct products such as
//! `S3xC2` or `Q8xC2^3`.

use cyclicity_core::arith::is_prime;
use cyclicity_core::GroupSpec;

fn int(s: &str, what: &str) -> Result<u64, String> {
    s.trim().parse().map_err(|_| format!("bad {what} in group spec: {s:?}"))
}

fn log2_exact(k: u64, what: &str) -> Result<u32, String> {
    if k.is_power_of_two() {
        Ok(k.trailing_zeros())
    } else {
        Err(format!("{what} needs a power of two, got {k}"))
    }
}

fn args(body: &str, n: usize, what: &str) -> Result<Vec<u64>, String> {
    let inner = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| format!("{what} needs parenthesized arguments"))?;
    let vals = inner.split(',').map(|s| int(s, what)).collect::<Result<Vec<_>, _>>()?;
    if vals.len() != n {
        return Err(format!("{what} takes {n} arguments, got {}", vals.len()));
    }
    Ok(vals)
}

fn factor(tok: &str) -> Result<GroupSpec, String> {
    let t = tok.trim();
    if t == "S3" {
        return Ok(GroupSpec::Dihedral(3));
    }
    if let Some(rest) = t.strip_prefix("ZM") {
        let v = args(rest, 3, "ZM")?;
        return Ok(GroupSpec::Zm { m: v[0], n: v[1], r: v[2] });
    }
    if let Some(rest) = t.strip_prefix("M") {
        let v = args(rest, 2, "M")?;
        let n = u32::try_from(v[1]).map_err(|_| "M(p,n): n too large".to_string())?;
        return Ok(GroupSpec::ModularM { p: v[0], n });
    }
    if let Some(rest) = t.strip_prefix("SD") {
        return Ok(GroupSpec::Semidihedral(log2_exact(int(rest, "SD")?, "SD")?));
    }
    if let Some(rest) = t.strip_prefix('Q') {
        return Ok(GroupSpec::GeneralizedQuaternion(log2_exact(int(rest, "Q")?, "Q")?));
    }
    if let Some(rest) = t.strip_prefix('D') {
        let k = int(rest, "D")?;
        if k == 0 || k % 2 == 1 {
            return Err(format!("D<2m> needs an even order, got D{k}"));
        }
        return Ok(GroupSpec::Dihedral(k / 2));
    }
    if let Some(rest) = t.strip_prefix('C') {
        return Ok(match rest.split_once('^') {
            None => GroupSpec::Cyclic(int(rest, "C")?),
            Some((base, k)) => {
                let p = int(base, "C")?;
                let k = u32::try_from(int(k, "exponent")?).map_err(|_| "exponent too large")?;
                if k == 0 {
                    return Err("C<n>^k needs k >= 1".into());
                }
                if is_prime(p) {
                    GroupSpec::ElementaryAbelian { p, k }
                } else {
                    GroupSpec::AbelianProduct(vec![p; k as usize])
                }
            }
        });
    }
    Err(format!("unknown group {t:?}"))
}

/// Splits on `x` outside parentheses.
fn split_product(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' | '*' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Parses and validates a group spec.
pub fn parse(s: &str) -> Result<GroupSpec, String> {
    let mut factors = split_product(s.trim()).into_iter().map(factor).collect::<Result<Vec<_>, _>>()?;
    let spec = if factors.len() == 1 { factors.pop().unwrap() } else { GroupSpec::DirectProduct(factors) };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}
