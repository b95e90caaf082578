//! Ground sets and canonical subsets.
//!
//! A [`Subset`] is a strictly increasing list of element indices together with
//! the size of the ground set it lives in. Every constructor and set operation
//! returns canonical form, so two subsets are equal iff their member lists are.
//! The text encoding is `{0,3,7}` (no spaces), and `{}` for the empty set.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
}

impl GroundSet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::invalid(
                "ground set must contain at least one element",
            ));
        }
        Ok(Self { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.size)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    members: Vec<usize>,
    parent_size: usize,
}

impl Subset {
    pub fn empty(parent_size: usize) -> Self {
        Self {
            members: Vec::new(),
            parent_size,
        }
    }

    pub fn full(parent_size: usize) -> Self {
        Self {
            members: (0..parent_size).collect(),
            parent_size,
        }
    }

    pub fn singleton(element: usize, parent_size: usize) -> Result<Self> {
        Self::from_indices([element], parent_size)
    }

    /// Builds a subset from indices in any order; rejects duplicates and out-of-range indices.
    pub fn from_indices<I>(indices: I, parent_size: usize) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::invalid(format!("duplicate element {}", w[0])));
            }
        }
        if let Some(&last) = members.last() {
            if last >= parent_size {
                return Err(Error::invalid(format!(
                    "element {last} out of range for ground set of size {parent_size}"
                )));
            }
        }
        Ok(Self {
            members,
            parent_size,
        })
    }

    /// Caller guarantees `members` is strictly increasing and in range.
    pub(crate) fn from_sorted_unchecked(members: Vec<usize>, parent_size: usize) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&m| m < parent_size));
        Self {
            members,
            parent_size,
        }
    }

    pub fn from_mask(mask: u64, parent_size: usize) -> Result<Self> {
        if parent_size < 64 && mask >> parent_size != 0 {
            return Err(Error::invalid(format!(
                "mask {mask:#x} has bits beyond ground set of size {parent_size}"
            )));
        }
        let members = (0..parent_size.min(64))
            .filter(|&i| mask >> i & 1 == 1)
            .collect();
        Ok(Self {
            members,
            parent_size,
        })
    }

    /// Bit-mask encoding; only defined for ground sets of at most 64 elements.
    pub fn to_mask(&self) -> Option<u64> {
        if self.parent_size > 64 {
            return None;
        }
        Some(self.members.iter().fold(0u64, |acc, &i| acc | 1 << i))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn parent_size(&self) -> usize {
        self.parent_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.binary_search(&element).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.parent_size == other.parent_size && self.iter().all(|x| other.contains(x))
    }

    /// `self ∪ {element}`.
    pub fn with(&self, element: usize) -> Result<Subset> {
        self.check_element(element)?;
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&element) {
            members.insert(pos, element);
        }
        Ok(Self::from_sorted_unchecked(members, self.parent_size))
    }

    /// `self ∖ {element}`.
    pub fn without(&self, element: usize) -> Result<Subset> {
        self.check_element(element)?;
        let members = self.iter().filter(|&x| x != element).collect();
        Ok(Self::from_sorted_unchecked(members, self.parent_size))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.check_parent(other)?;
        let (a, b) = (&self.members, &other.members);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Self::from_sorted_unchecked(out, self.parent_size))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.check_parent(other)?;
        let members = self.iter().filter(|&x| other.contains(x)).collect();
        Ok(Self::from_sorted_unchecked(members, self.parent_size))
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.check_parent(other)?;
        let members = self.iter().filter(|&x| !other.contains(x)).collect();
        Ok(Self::from_sorted_unchecked(members, self.parent_size))
    }

    pub fn complement(&self) -> Subset {
        let members = (0..self.parent_size)
            .filter(|&x| !self.contains(x))
            .collect();
        Self::from_sorted_unchecked(members, self.parent_size)
    }

    /// Parses the canonical encoding. Whitespace around elements is tolerated,
    /// but the members must be listed in strictly increasing order.
    pub fn parse(text: &str, parent_size: usize) -> Result<Subset> {
        let members = parse_members(text)?;
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "subset {text:?} is not in strictly increasing order"
            )));
        }
        Self::from_indices(members, parent_size).map_err(|e| Error::Parse(e.to_string()))
    }

    fn check_parent(&self, other: &Subset) -> Result<()> {
        if self.parent_size != other.parent_size {
            return Err(Error::invalid(format!(
                "subsets belong to different ground sets ({} vs {})",
                self.parent_size, other.parent_size
            )));
        }
        Ok(())
    }

    fn check_element(&self, element: usize) -> Result<()> {
        if element >= self.parent_size {
            return Err(Error::invalid(format!(
                "element {element} out of range for ground set of size {}",
                self.parent_size
            )));
        }
        Ok(())
    }
}

/// Parses `{a,b,c}` into raw indices without ordering checks.
pub(crate) fn parse_members(text: &str) -> Result<Vec<usize>> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("subset {text:?} must be wrapped in braces")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad element {tok:?} in subset {text:?}")))
        })
        .collect()
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Parses with the parent size set to one past the largest member.
impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let members = parse_members(s)?;
        let parent = members.iter().max().map_or(0, |&m| m + 1);
        Subset::parse(s, parent)
    }
}
