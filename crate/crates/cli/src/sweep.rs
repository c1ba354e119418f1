//! Sweep grids such as `p=2,3;n=1..3;k=1..3`.

use std::collections::BTreeSet;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sweep {
    pub p: Vec<u32>,
    pub n: Vec<usize>,
    pub k: Vec<usize>,
}

fn values(key: &str, list: &str) -> Result<BTreeSet<u64>, String> {
    let mut out = BTreeSet::new();
    for item in list.split(',').map(str::trim) {
        let num = |s: &str| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| format!("--sweep: {key}: {s:?} is not a nonnegative integer"))
        };
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi {
                    return Err(format!("--sweep: {key}: empty range {item}"));
                }
                out.extend(lo..=hi);
            }
            None => {
                out.insert(num(item)?);
            }
        }
    }
    Ok(out)
}

impl std::str::FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut sweep = Sweep::default();
        let mut seen = BTreeSet::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, list) = part
                .split_once('=')
                .ok_or_else(|| format!("--sweep: {part:?} is not of the form key=values"))?;
            let key = key.trim();
            if !seen.insert(key.to_owned()) {
                return Err(format!("--sweep: {key} given twice"));
            }
            let vals = values(key, list)?;
            match key {
                "p" => sweep.p = vals.into_iter().map(|v| v as u32).collect(),
                "n" => sweep.n = vals.into_iter().map(|v| v as usize).collect(),
                "k" => sweep.k = vals.into_iter().map(|v| v as usize).collect(),
                other => return Err(format!("--sweep: unknown key {other:?} (expected p, n, k)")),
            }
        }
        if sweep.p.is_empty() {
            return Err("--sweep: p values are required".into());
        }
        Ok(sweep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_ranges() {
        let s: Sweep = "p=3,2;n=1..3;k=2".parse().unwrap();
        assert_eq!(s.p, [2, 3]);
        assert_eq!(s.n, [1, 2, 3]);
        assert_eq!(s.k, [2]);
        let s: Sweep = " p = 2 ; k = 1..2 , 5 ".parse().unwrap();
        assert_eq!((s.p, s.n, s.k), (vec![2], vec![], vec![1, 2, 5]));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["n=1..3", "p=2;q=1", "p=2;p=3", "p=x", "p=3..2", "p"] {
            assert!(bad.parse::<Sweep>().is_err(), "{bad}");
        }
    }
}
