use crate::inner::orbit_closure;
use crate::lattice::strong::{classify_strong_complement, is_strongly_complemented};
use crate::lattice::{join, meet};
use crate::perm::Sign;
use crate::quandle::FiniteQuandle;
use crate::set::ElementSet;
use crate::{Error, Result};

/// `S_element` or its inverse, as a letter of a word acting on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub element: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn plus(element: usize) -> Self {
        Letter {
            element,
            sign: Sign::Plus,
        }
    }

    pub fn minus(element: usize) -> Self {
        Letter {
            element,
            sign: Sign::Minus,
        }
    }
}

fn apply_word(q: &FiniteQuandle, s: &ElementSet, word: &[Letter]) -> ElementSet {
    let members = s
        .iter()
        .map(|x| {
            word.iter().fold(x, |acc, l| match l.sign {
                Sign::Plus => q.op(acc, l.element),
                Sign::Minus => q.inv_op(acc, l.element),
            })
        })
        .collect::<Vec<_>>();
    ElementSet::from_members(q.size(), members)
}

/// Whether `inner` is strongly complemented in the quandle induced on `outer`.
fn strongly_complemented_within(
    q: &FiniteQuandle,
    outer: &ElementSet,
    inner: &ElementSet,
) -> Result<bool> {
    if outer.is_empty() {
        return Ok(true);
    }
    let (sub, members) = q.induced(outer)?;
    let local = ElementSet::from_members(
        members.len(),
        members
            .iter()
            .enumerate()
            .filter(|(_, &m)| inner.contains(m))
            .map(|(i, _)| i),
    );
    Ok(classify_strong_complement(&sub, &local)?.cond_setminus)
}

fn require_chain(q: &FiniteQuandle, outer: &ElementSet, inner: &ElementSet) -> Result<()> {
    q.require_quandle()?;
    for (name, s) in [("Q'", outer), ("Q''", inner)] {
        if s.carrier_size() != q.size() || !q.is_subquandle(s) {
            return Err(Error::Hypothesis(format!(
                "{name} = {} is not a subquandle",
                s.one_based()
            )));
        }
    }
    if !inner.is_subset(outer) {
        return Err(Error::Hypothesis(format!(
            "{} is not contained in {}",
            inner.one_based(),
            outer.one_based()
        )));
    }
    Ok(())
}

/// For `Q″ ⊑ Q′ ⊑ Q` with `Q″` strongly complemented in `Q`, confirms that
/// `Q″` is strongly complemented in `Q′`.
pub fn check_nested_strong_complement(
    q: &FiniteQuandle,
    outer: &ElementSet,
    inner: &ElementSet,
) -> Result<bool> {
    require_chain(q, outer, inner)?;
    if !is_strongly_complemented(q, inner) {
        return Err(Error::Hypothesis(format!(
            "{} is not strongly complemented in Q",
            inner.one_based()
        )));
    }
    if !strongly_complemented_within(q, outer, inner)? {
        return Err(Error::Falsified(format!(
            "{} is strongly complemented in Q but not in {}",
            inner.one_based(),
            outer.one_based()
        )));
    }
    Ok(true)
}

fn require_strong_chain(q: &FiniteQuandle, outer: &ElementSet, inner: &ElementSet) -> Result<()> {
    require_chain(q, outer, inner)?;
    if !is_strongly_complemented(q, outer) {
        return Err(Error::Hypothesis(format!(
            "{} is not strongly complemented in Q",
            outer.one_based()
        )));
    }
    if !strongly_complemented_within(q, outer, inner)? {
        return Err(Error::Hypothesis(format!(
            "{} is not strongly complemented in {}",
            inner.one_based(),
            outer.one_based()
        )));
    }
    Ok(())
}

/// The complement `Q ∖ (Q″·Inn(Q))` of the bottom of a strong chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplement {
    pub complement: ElementSet,
    /// `Q″·Inn(Q)`, which is the strong complement of `complement`.
    pub orbit_closure: ElementSet,
}

/// Builds the explicit complement for a chain `Q″ ⊑ Q′ ⊑ Q` in which each
/// link is strongly complemented, and verifies it.
pub fn explicit_chain_complement(
    q: &FiniteQuandle,
    outer: &ElementSet,
    inner: &ElementSet,
) -> Result<ChainComplement> {
    require_strong_chain(q, outer, inner)?;
    let closure = orbit_closure(q, inner);
    let complement = closure.complement();

    if !closure.is_subset(outer) {
        return Err(Error::Falsified(format!(
            "orbit closure {} escapes {}",
            closure.one_based(),
            outer.one_based()
        )));
    }
    if !meet(inner, &complement).is_empty() {
        return Err(Error::Falsified("explicit complement meets Q''".into()));
    }
    if !join(q, inner, &complement).is_full() {
        return Err(Error::Falsified(format!(
            "{} ∨ {} is not all of Q",
            inner.one_based(),
            complement.one_based()
        )));
    }
    if !is_strongly_complemented(q, &complement) || complement.complement() != closure {
        return Err(Error::Falsified(
            "explicit complement is not strongly complemented by the orbit closure".into(),
        ));
    }
    Ok(ChainComplement {
        complement,
        orbit_closure: closure,
    })
}

/// Drops the letters at elements of `Q′` from a word in symmetries; the
/// shortened word moves `Q″` to the same place.
pub fn removal_rewrite(
    q: &FiniteQuandle,
    outer: &ElementSet,
    inner: &ElementSet,
    word: &[Letter],
) -> Result<Vec<Letter>> {
    require_strong_chain(q, outer, inner)?;
    if let Some(l) = word.iter().find(|l| l.element >= q.size()) {
        return Err(Error::OutOfRange {
            index: l.element,
            size: q.size(),
        });
    }
    let kept: Vec<Letter> = word
        .iter()
        .copied()
        .filter(|l| !outer.contains(l.element))
        .collect();
    let before = apply_word(q, inner, word);
    let after = apply_word(q, inner, &kept);
    if before != after {
        return Err(Error::Falsified(format!(
            "removing Q' letters moved Q'' to {} instead of {}",
            after.one_based(),
            before.one_based()
        )));
    }
    Ok(kept)
}
