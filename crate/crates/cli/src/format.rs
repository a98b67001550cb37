//! Text forms of monomials, ideals, clutters, parameters and Betti tables.

use anyhow::{anyhow, bail, ensure, Context, Result};
use pathideal::{BettiTable, Clutter, FieldSpec, Monomial, MonomialIdeal, PathParams, VarSet};

/// `x1*x2*x3`, or `1` for the empty product.
pub fn parse_monomial(text: &str) -> Result<Monomial> {
    let text = text.trim();
    if text == "1" {
        return Ok(Monomial::ONE);
    }
    let mut vars = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let index = factor.strip_prefix('x').ok_or_else(|| anyhow!("expected a variable like x3, got {factor:?}"))?;
        vars.push(index.parse::<u32>().with_context(|| format!("bad variable index in {factor:?}"))?);
    }
    Ok(Monomial::from_vars(&vars)?)
}

/// `{1,2,3}`, or `{}`.
pub fn parse_varset(text: &str) -> Result<VarSet> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| anyhow!("expected {{...}}, got {text:?}"))?;
    if inner.trim().is_empty() {
        return Ok(VarSet::EMPTY);
    }
    let indices = inner
        .split(',')
        .map(|s| s.trim().parse::<u32>().with_context(|| format!("bad index {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(VarSet::from_indices(indices)?)
}

fn split_ambient(text: &str) -> Result<(u32, &str)> {
    let (head, body) = text.split_once(';').ok_or_else(|| anyhow!("expected `n=<size>; ...`"))?;
    let n = head
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| anyhow!("expected `n=<size>` before `;`"))?
        .trim()
        .parse::<u32>()
        .context("bad ambient size")?;
    Ok((n, body.trim()))
}

/// `n=5; (x1*x2*x3, x3*x4*x5)`; `(0)` is the zero ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let (n, body) = split_ambient(text)?;
    let inner = body
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| anyhow!("expected generators in parentheses"))?;
    if inner.trim() == "0" {
        return Ok(MonomialIdeal::zero(n)?);
    }
    let gens = inner.split(',').map(parse_monomial).collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::minimalize(n, gens)?)
}

fn parse_set_list(body: &str) -> Result<Vec<VarSet>> {
    let mut sets = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let close = rest.find('}').ok_or_else(|| anyhow!("unclosed set in {body:?}"))?;
        sets.push(parse_varset(&rest[..=close])?);
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        }
    }
    Ok(sets)
}

/// `n=5; {1,2,3},{3,4,5}`.
pub fn parse_clutter(text: &str) -> Result<Clutter> {
    let (n, body) = split_ambient(text)?;
    let edges = parse_set_list(body)?;
    ensure!(edges.iter().all(|e| !e.is_empty()), "clutter edges must be nonempty");
    Ok(Clutter::new(n, edges)?)
}

/// `m=3,l=1,k=2`.
pub fn parse_params(text: &str) -> Result<PathParams> {
    let (mut m, mut l, mut k) = (None, None, None);
    for part in text.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(|| anyhow!("expected key=value, got {part:?}"))?;
        let value: u32 = value.trim().parse().with_context(|| format!("bad value in {part:?}"))?;
        match key.trim() {
            "m" => m = Some(value),
            "l" => l = Some(value),
            "k" => k = Some(value),
            other => bail!("unknown parameter {other:?}"),
        }
    }
    let get = |v: Option<u32>, name: &str| v.ok_or_else(|| anyhow!("missing {name}"));
    Ok(PathParams::new(get(m, "m")?, get(l, "l")?, get(k, "k")?)?)
}

/// `gf2`, `gf<p>` for a prime `p`, or `rat`.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let t = text.trim().to_ascii_lowercase();
    if t == "rat" || t == "qq" {
        return Ok(FieldSpec::Rational);
    }
    let p = t
        .strip_prefix("gf")
        .ok_or_else(|| anyhow!("expected gf2, gf<p> or rat, got {text:?}"))?
        .parse::<u32>()
        .context("bad characteristic")?;
    Ok(FieldSpec::prime(p)?)
}

/// Inclusive range `a-b`, or a single value.
pub fn parse_range(text: &str) -> Result<(u32, u32)> {
    let (lo, hi) = match text.split_once('-') {
        Some((a, b)) => (a.trim().parse()?, b.trim().parse()?),
        None => {
            let v = text.trim().parse()?;
            (v, v)
        }
    };
    ensure!(lo <= hi, "empty range {text:?}");
    Ok((lo, hi))
}

/// One `i j beta` line per nonzero entry, sorted by `(i, j)`.
pub fn golden(table: &BettiTable) -> String {
    table.iter().map(|(i, j, b)| format!("{i} {j} {b}\n")).collect()
}

pub fn parse_golden(text: &str) -> Result<BettiTable> {
    let mut table = BettiTable::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|s| s.parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("line {}", lineno + 1))?;
        ensure!(nums.len() == 3, "line {}: expected `i j beta`", lineno + 1);
        table.add(u32::try_from(nums[0])?, u32::try_from(nums[1])?, nums[2]);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn monomials() {
        assert_eq!(parse_monomial("x1*x2*x3").unwrap(), Monomial::from_vars(&[1, 2, 3]).unwrap());
        assert_eq!(parse_monomial(" x3 * x1 ").unwrap(), Monomial::from_vars(&[1, 3]).unwrap());
        assert_eq!(parse_monomial("1").unwrap(), Monomial::ONE);
        assert!(parse_monomial("y1").is_err());
        assert!(parse_monomial("x0").is_err());
    }

    #[test]
    fn ideals_round_trip() {
        let text = "n=5; (x1*x2*x3, x3*x4*x5)";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.to_string(), text);
        assert!(parse_ideal("n=3; (0)").unwrap().is_zero());
        assert!(parse_ideal("n=3; (x4)").is_err());
        assert_eq!(parse_ideal("n=3; (x1*x2, x1*x2*x3)").unwrap().num_gens(), 1);
    }

    #[test]
    fn clutters_round_trip() {
        let text = "n=5; {1,2,3},{3,4,5}";
        assert_eq!(parse_clutter(text).unwrap().to_string(), text);
        assert!(parse_clutter("n=3; {}").is_err());
    }

    #[test]
    fn params_and_fields() {
        let p = parse_params("m=3,l=1,k=2").unwrap();
        assert_eq!((p.m(), p.l(), p.k(), p.n()), (3, 1, 2, 5));
        assert_eq!(p.to_string(), "m=3,l=1,k=2");
        assert!(parse_params("m=3,l=3,k=2").is_err());
        assert_eq!(parse_field("gf2").unwrap(), FieldSpec::Gf2);
        assert_eq!(parse_field("gf5").unwrap(), FieldSpec::Gfp(5));
        assert_eq!(parse_field("rat").unwrap(), FieldSpec::Rational);
        assert!(parse_field("gf4").is_err());
        assert_eq!(parse_range("2-5").unwrap(), (2, 5));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("5-2").is_err());
    }

    #[test]
    fn golden_format() {
        let t = BettiTable::from_entries([(1, 5, 1), (0, 3, 2)]);
        assert_eq!(golden(&t), "0 3 2\n1 5 1\n");
        assert_eq!(parse_golden("0 3 2\n1 5 1\n").unwrap(), t);
        assert!(parse_golden("0 3\n").is_err());
    }

    proptest! {
        #[test]
        fn ideal_text_round_trips(n in 1u32..=10, raw in prop::collection::vec(1u32..1024, 1..6)) {
            let gens = raw.into_iter().map(|b| Monomial::new(VarSet::from_bits(b & ((1 << n) - 1))));
            if let Ok(i) = MonomialIdeal::minimalize(n, gens) {
                prop_assert_eq!(parse_ideal(&i.to_string()).unwrap(), i);
            }
        }
    }
}
