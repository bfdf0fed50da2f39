//! Closed-form values and bounds for `e_k(n, l, d)`, one entry per result,
//! each guarded by its hypothesis range.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::constructions::wheel_chain_formula;

/// Identifiers follow the numbering of the results; item suffixes keep their
/// roman numerals.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Lem2_1,
    Prop2_1,
    Prop2_2,
    Thm2_1_1,
    Thm2_1_2,
    Prop3_1,
    Prop3_2,
    Lem3_2_i,
    Lem3_2_ii,
    Lem3_2_iii,
    Lem3_2_iv,
    Cor4_1,
    Prop4_1,
    Prop4_2,
    Prop4_3,
    Thm5_1_i,
    Thm5_1_ii,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::Lem2_1,
        TheoremId::Prop2_1,
        TheoremId::Prop2_2,
        TheoremId::Thm2_1_1,
        TheoremId::Thm2_1_2,
        TheoremId::Prop3_1,
        TheoremId::Prop3_2,
        TheoremId::Lem3_2_i,
        TheoremId::Lem3_2_ii,
        TheoremId::Lem3_2_iii,
        TheoremId::Lem3_2_iv,
        TheoremId::Cor4_1,
        TheoremId::Prop4_1,
        TheoremId::Prop4_2,
        TheoremId::Prop4_3,
        TheoremId::Thm5_1_i,
        TheoremId::Thm5_1_ii,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Lem2_1 => "Lem2.1",
            TheoremId::Prop2_1 => "Prop2.1",
            TheoremId::Prop2_2 => "Prop2.2",
            TheoremId::Thm2_1_1 => "Thm2.1.1",
            TheoremId::Thm2_1_2 => "Thm2.1.2",
            TheoremId::Prop3_1 => "Prop3.1",
            TheoremId::Prop3_2 => "Prop3.2",
            TheoremId::Lem3_2_i => "Lem3.2.i",
            TheoremId::Lem3_2_ii => "Lem3.2.ii",
            TheoremId::Lem3_2_iii => "Lem3.2.iii",
            TheoremId::Lem3_2_iv => "Lem3.2.iv",
            TheoremId::Cor4_1 => "Cor4.1",
            TheoremId::Prop4_1 => "Prop4.1",
            TheoremId::Prop4_2 => "Prop4.2",
            TheoremId::Prop4_3 => "Prop4.3",
            TheoremId::Thm5_1_i => "Thm5.1.i",
            TheoremId::Thm5_1_ii => "Thm5.1.ii",
        }
    }

    /// Results that claim an exact value rather than bounds.
    pub fn is_exact(self) -> bool {
        !matches!(
            self,
            TheoremId::Prop3_2 | TheoremId::Prop4_2 | TheoremId::Prop4_3 | TheoremId::Thm5_1_i
        )
    }

    /// Smallest order at which the hypotheses admit a parameter tuple.
    pub fn first_admissible_order(self) -> Option<usize> {
        (2..=128).find(|&n| !grid(self, n).is_empty())
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A point `(n, l, k, d)`; `s` is the fan-chain parameter, used only by
/// `Prop3.2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub l: usize,
    pub k: usize,
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
}

impl Params {
    pub fn new(n: usize, l: usize, k: usize, d: usize) -> Self {
        Params { n, l, k, d, s: None }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} l={} k={} d={}", self.n, self.l, self.k, self.d)?;
        if let Some(s) = self.s {
            write!(f, " s={s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{theorem}: requires {condition} (got {params})")]
pub struct HypothesisViolation {
    pub theorem: TheoremId,
    pub condition: &'static str,
    pub params: Params,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Exact(usize),
    Bounds { lower: Option<usize>, upper: Option<usize> },
}

impl Expected {
    pub fn admits(&self, value: Option<usize>) -> bool {
        match (*self, value) {
            (Expected::Exact(e), v) => v == Some(e),
            (Expected::Bounds { lower, upper }, v) => {
                // `None` is an infeasible family, i.e. +infinity.
                let above = lower.is_none_or(|lo| v.is_none_or(|v| v >= lo));
                let below = upper.is_none_or(|up| v.is_some_and(|v| v <= up));
                above && below
            }
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Expected::Exact(v) => write!(f, "{v}"),
            Expected::Bounds { lower, upper } => {
                let show = |b: Option<usize>| b.map_or("-".to_string(), |b| b.to_string());
                write!(f, "[{}, {}]", show(lower), show(upper))
            }
        }
    }
}

impl Serialize for Expected {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match *self {
            Expected::Exact(v) => s.serialize_u64(v as u64),
            Expected::Bounds { lower, upper } => {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("lower", &lower)?;
                map.serialize_entry("upper", &upper)?;
                map.end()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub expected: Expected,
    pub note: Option<String>,
}

impl ClosedForm {
    fn exact(v: usize) -> Self {
        ClosedForm {
            expected: Expected::Exact(v),
            note: None,
        }
    }

    fn bounds(lower: usize, upper: Option<usize>) -> Self {
        ClosedForm {
            expected: Expected::Bounds {
                lower: Some(lower),
                upper,
            },
            note: None,
        }
    }
}

/// The fan-chain parameter `s` in `2..=5` with `4 | n - l - 3 - s`.
pub fn fan_chain_s(n: usize, l: usize) -> Option<usize> {
    let rest = n.checked_sub(l + 3)?;
    (2..=5).find(|s| rest >= *s && (rest - s) % 4 == 0)
}

/// Value or bounds claimed for `e_k(n, l, d)` at `p`, or the violated
/// hypothesis.
pub fn closed_form(id: TheoremId, p: &Params) -> Result<ClosedForm, HypothesisViolation> {
    let Params { n, l, k, d, .. } = *p;
    let need = |ok: bool, condition: &'static str| {
        if ok {
            Ok(())
        } else {
            Err(HypothesisViolation {
                theorem: id,
                condition,
                params: *p,
            })
        }
    };
    need(
        (2..=n).contains(&k) && k <= d + 1 && d < n && (2..n).contains(&l),
        "2 <= k <= n, k-1 <= d <= n-1, 2 <= l <= n-1",
    )?;
    if id != TheoremId::Prop3_2 {
        need(p.s.is_none(), "no s parameter")?;
    }
    use TheoremId::*;
    match id {
        Lem2_1 => {
            need(k >= 3 && d == n - 1, "3 <= k <= n, d = n-1")?;
            Ok(ClosedForm::exact(n - 1))
        }
        Prop2_1 => {
            need(k == n && d == n - 1, "k = n, d = n-1")?;
            Ok(ClosedForm::exact(n - 1))
        }
        Prop2_2 => {
            need(l == n - 1 && k >= 3 && d == k, "l = n-1, 3 <= k <= n-1, d = k")?;
            Ok(ClosedForm::exact(n - 1))
        }
        Thm2_1_1 => {
            need(k == n - 1 && d == n - 1, "k = n-1, d = n-1")?;
            Ok(ClosedForm::exact(n - 1))
        }
        Thm2_1_2 => {
            need(k == n - 1 && d + 2 == n, "k = n-1, d = n-2")?;
            Ok(ClosedForm::exact(n + l - 2))
        }
        Prop3_1 => {
            need(n >= 5 && k + 2 == n && d + 2 == n, "n >= 5, k = n-2, d = n-2")?;
            Ok(ClosedForm::exact(if l + 2 <= n { n } else { n - 1 }))
        }
        Prop3_2 => {
            need(k + 2 == n && d + 3 == n, "k = n-2, d = n-3")?;
            need(l >= 6 && l + 9 <= n, "6 <= l <= n-9")?;
            let realizable = fan_chain_s(n, l).expect("n - l - 3 >= 6");
            let s = p.s.unwrap_or(realizable);
            need((2..=5).contains(&s), "2 <= s <= 5")?;
            let lower = (3 * n + l - 3).div_ceil(2);
            let upper = (3 * n + l + s - 5) / 2;
            let mut notes = Vec::new();
            if s != realizable {
                notes.push(format!("no fan chain has s={s} at n={n}, l={l} (needs 4 | n-l-3-s)"));
            }
            if s == 2 && (3 * n + l - 3) % 2 == 1 {
                notes.push(format!("(3n+l-3)/2 = {}/2 is not an integer", 3 * n + l - 3));
            }
            if s == 2 && notes.is_empty() {
                return Ok(ClosedForm::exact(lower));
            }
            let mut cf = ClosedForm::bounds(lower, Some(upper));
            if !notes.is_empty() {
                notes.push("reporting the bound pair".into());
                cf.note = Some(notes.join("; "));
            }
            Ok(cf)
        }
        Lem3_2_i | Lem3_2_ii | Lem3_2_iii | Lem3_2_iv => {
            need(k + 2 == n && d + 3 == n, "k = n-2, d = n-3")?;
            let (offset, min_n, value, condition) = match id {
                Lem3_2_i => (1, 5, 2 * n - 2, "l = n-1-i, n >= 5+i, i in {0,1}"),
                Lem3_2_ii => (3, 7, 2 * n - 3, "l = n-3-i, n >= 7+2i, i in {0,1}"),
                Lem3_2_iii => (5, 11, 2 * n - 4, "l = n-5-i, n >= 11+2i, i in {0,1}"),
                _ => (7, 15, 2 * n - 5, "l = n-7-i, n >= 15+2i, i in {0,1}"),
            };
            let i = (n - l).checked_sub(offset);
            let step = if id == Lem3_2_i { 1 } else { 2 };
            need(matches!(i, Some(i) if i <= 1 && n >= min_n + step * i), condition)?;
            Ok(ClosedForm::exact(value))
        }
        Cor4_1 => {
            need(n >= 5 && k + 3 == n && d + 1 == n, "n >= 5, k = n-3, d = n-1")?;
            Ok(ClosedForm::exact(n - 1))
        }
        Prop4_1 => {
            need(n >= 5 && k + 3 == n && d + 2 == n, "n >= 5, k = n-3, d = n-2")?;
            let half = n / 2;
            let cycle_like = l < half || (l == half && n % 2 == 1);
            Ok(ClosedForm::exact(if cycle_like { n } else { n - 1 }))
        }
        Prop4_2 => {
            need(n >= 96 && k + 3 == n && d + 4 == n, "n >= 96, k = n-3, d = n-4")?;
            let lower = 2 * n - 2 - l.div_ceil(2);
            let i = n % 32;
            let mut cf = ClosedForm::bounds(lower, (i >= 1).then(|| 74 * (n / 32) + 2 * i + l - 9));
            if i == 0 {
                cf.note = Some("n = 0 mod 32: no upper bound stated".into());
            }
            Ok(cf)
        }
        Prop4_3 => {
            need(n >= 5 && k + 3 == n && d + 3 == n, "n >= 5, k = n-3, d = n-3")?;
            let lower = (n - 1 + l.div_ceil(2)).max((3 * n).saturating_sub(l + 3).div_ceil(2));
            let upper = if l > n.div_ceil(2) {
                Some(2 * n - l + 1)
            } else if l >= 5 {
                Some(wheel_chain_formula(n, l))
            } else {
                None
            };
            Ok(ClosedForm::bounds(lower, upper))
        }
        Thm5_1_i => {
            need(d + 1 == k, "d = k-1")?;
            need(k >= (n + 1).div_ceil(2), "ceil((n+1)/2) <= k <= n")?;
            need(l > (n - k + 1).max(n.div_ceil(2)), "max{n-k+1, ceil(n/2)} < l <= n-1")?;
            let lower = (l + (n - 1) * (n - k + 1)).div_ceil(2);
            let upper = (n - 1) * (n - 1) / 4 + l;
            Ok(ClosedForm::bounds(lower, Some(upper)))
        }
        Thm5_1_ii => {
            need(k <= d, "2 <= k <= d <= n-1")?;
            let span = d - k + 1;
            need(
                l >= 2 + (n - d + k - 3).div_ceil(span),
                "2 + ceil((n-d+k-3)/(d-k+1)) <= l <= n-1",
            )?;
            Ok(ClosedForm::exact(n - 1))
        }
    }
}

/// Every admissible point of `id` at order `n`, ordered by `l`, `k`, `d`.
/// For `Prop3.2` the point carries the realizable `s`.
pub fn grid(id: TheoremId, n: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for l in 2..n {
        for k in 2..=n {
            for d in k - 1..n {
                let mut p = Params::new(n, l, k, d);
                if closed_form(id, &p).is_ok() {
                    if id == TheoremId::Prop3_2 {
                        p.s = fan_chain_s(n, l);
                    }
                    out.push(p);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(id: TheoremId, n: usize, l: usize, k: usize, d: usize) -> Result<ClosedForm, HypothesisViolation> {
        closed_form(id, &Params::new(n, l, k, d))
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("Thm9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn stated_examples() {
        assert_eq!(cf(TheoremId::Thm2_1_2, 7, 4, 6, 5).unwrap().expected, Expected::Exact(9));
        assert_eq!(cf(TheoremId::Prop4_1, 8, 4, 5, 6).unwrap().expected, Expected::Exact(7));
        assert_eq!(cf(TheoremId::Prop4_1, 7, 3, 4, 5).unwrap().expected, Expected::Exact(7));
        assert_eq!(cf(TheoremId::Prop3_1, 6, 4, 4, 4).unwrap().expected, Expected::Exact(6));
        assert_eq!(cf(TheoremId::Prop3_1, 6, 5, 4, 4).unwrap().expected, Expected::Exact(5));
    }

    #[test]
    fn prop_3_2_parity_note() {
        let p = Params {
            s: Some(2),
            ..Params::new(18, 6, 16, 15)
        };
        let c = closed_form(TheoremId::Prop3_2, &p).unwrap();
        assert_eq!(
            c.expected,
            Expected::Bounds {
                lower: Some(29),
                upper: Some(28)
            }
        );
        assert!(c.note.unwrap().contains("57/2"));
        // n - l - 5 divisible by 4 makes s = 2 realizable and the value integral.
        let c = cf(TheoremId::Prop3_2, 19, 6, 17, 16).unwrap();
        assert_eq!(c.expected, Expected::Exact(30));
        assert_eq!(grid(TheoremId::Prop3_2, 19)[0].s, Some(2));
        assert_eq!(fan_chain_s(18, 6), Some(5));
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(cf(TheoremId::Lem2_1, 6, 3, 2, 5).is_err());
        assert!(cf(TheoremId::Prop2_2, 6, 4, 3, 3).is_err());
        assert!(cf(TheoremId::Prop3_1, 4, 2, 2, 2).is_err());
        assert!(cf(TheoremId::Prop4_2, 95, 6, 92, 91).is_err());
        assert!(cf(TheoremId::Prop4_2, 96, 6, 93, 92).is_ok());
        let err = cf(TheoremId::Thm5_1_i, 6, 3, 4, 3).unwrap_err();
        assert!(err.to_string().starts_with("Thm5.1.i: requires"));
    }

    #[test]
    fn lemma_3_2_items() {
        assert_eq!(grid(TheoremId::Lem3_2_i, 5).iter().map(|p| p.l).collect::<Vec<_>>(), [4]);
        assert_eq!(grid(TheoremId::Lem3_2_i, 6).iter().map(|p| p.l).collect::<Vec<_>>(), [4, 5]);
        assert_eq!(grid(TheoremId::Lem3_2_ii, 7).iter().map(|p| p.l).collect::<Vec<_>>(), [4]);
        assert_eq!(grid(TheoremId::Lem3_2_ii, 9).iter().map(|p| p.l).collect::<Vec<_>>(), [5, 6]);
        assert_eq!(TheoremId::Lem3_2_iii.first_admissible_order(), Some(11));
        assert_eq!(TheoremId::Lem3_2_iv.first_admissible_order(), Some(15));
        assert_eq!(TheoremId::Prop3_2.first_admissible_order(), Some(15));
        assert_eq!(TheoremId::Prop4_2.first_admissible_order(), Some(96));
    }

    #[test]
    fn bounds_admit() {
        let b = Expected::Bounds {
            lower: Some(5),
            upper: Some(7),
        };
        assert!(b.admits(Some(5)) && b.admits(Some(7)));
        assert!(!b.admits(Some(4)) && !b.admits(Some(8)) && !b.admits(None));
        let open = Expected::Bounds {
            lower: Some(5),
            upper: None,
        };
        assert!(open.admits(None));
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"lower":5,"upper":7}"#);
    }

    #[test]
    fn prop_4_2_and_4_3_values() {
        let c = cf(TheoremId::Prop4_2, 97, 7, 94, 93).unwrap();
        assert_eq!(
            c.expected,
            Expected::Bounds {
                lower: Some(188),
                upper: Some(222)
            }
        );
        let c = cf(TheoremId::Prop4_3, 12, 5, 9, 9).unwrap();
        assert_eq!(
            c.expected,
            Expected::Bounds {
                lower: Some(14),
                upper: Some(23)
            }
        );
    }
}
