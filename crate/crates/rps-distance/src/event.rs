//! Permutation events and the (l, o) event codec.
//!
//! An ordered focal set is a sequence of distinct element indices. It is
//! uniquely identified by a 2-tuple (l, o): `l` is the decimal value of the
//! element-membership bit word, and `o` is the 1-based lexicographic rank of
//! the sequence among all k! permutations of its element set.

use crate::error::{Error, Result};
use crate::frame::FrameOfDiscernment;

/// A permutation event: distinct element indices in visit order, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedFocalSet {
    elements: Vec<usize>,
}

impl OrderedFocalSet {
    pub fn new(elements: Vec<usize>, frame: &FrameOfDiscernment) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyEvent);
        }
        let mut seen = 0u64;
        for &i in &elements {
            if i == 0 || i > frame.size() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: frame.size(),
                });
            }
            let bit = 1u64 << (i - 1);
            if seen & bit != 0 {
                return Err(Error::DuplicateElement { index: i });
            }
            seen |= bit;
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Membership bitmask of the full underlying set.
    pub fn set_mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// Membership bitmask of the first min(d, len) elements.
    pub fn prefix_mask(&self, d: usize) -> u64 {
        self.elements[..d.min(self.elements.len())]
            .iter()
            .fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// 1-based position of an element, if present.
    pub fn rank_of(&self, element: usize) -> Option<usize> {
        self.elements
            .iter()
            .position(|&e| e == element)
            .map(|p| p + 1)
    }

    /// Sort key matching the canonical PES order: ascending l, then o.
    pub fn sort_key(&self) -> (u64, u64) {
        let code = encode_event(self);
        (code.l, code.o)
    }

    /// Renders as "(τ₁τ₃)" for default frames; custom labels are joined
    /// with spaces.
    pub fn display(&self, frame: &FrameOfDiscernment) -> String {
        let sep = if frame.labels().is_some() { " " } else { "" };
        let body: Vec<String> = self.elements.iter().map(|&i| frame.label(i)).collect();
        format!("({})", body.join(sep))
    }
}

/// The (l, o) identifier of a permutation event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EventCode {
    pub l: u64,
    pub o: u64,
}

pub(crate) fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Encode an event as its (l, o) code.
pub fn encode_event(ofs: &OrderedFocalSet) -> EventCode {
    let elems = ofs.elements();
    let l = ofs.set_mask();
    let k = elems.len();
    let mut remaining: Vec<usize> = elems.to_vec();
    remaining.sort_unstable();
    let mut rank = 0u64;
    for (p, &e) in elems.iter().enumerate() {
        let pos = remaining.iter().position(|&x| x == e).unwrap();
        rank += pos as u64 * factorial(k - 1 - p);
        remaining.remove(pos);
    }
    EventCode { l, o: rank + 1 }
}

/// Decode an (l, o) code back to the event. Inverse of [`encode_event`].
pub fn decode_event(code: EventCode, frame: &FrameOfDiscernment) -> Result<OrderedFocalSet> {
    if code.l == 0 {
        return Err(Error::BadEventCode {
            l: code.l,
            o: code.o,
            reason: "the empty event has no ordered focal set".into(),
        });
    }
    if frame.size() < 64 && code.l >= 1u64 << frame.size() {
        return Err(Error::BadEventCode {
            l: code.l,
            o: code.o,
            reason: format!("set code exceeds a {}-element frame", frame.size()),
        });
    }
    let mut remaining: Vec<usize> = (1..=frame.size())
        .filter(|&i| code.l & (1 << (i - 1)) != 0)
        .collect();
    let k = remaining.len();
    if code.o < 1 || code.o > factorial(k) {
        return Err(Error::BadEventCode {
            l: code.l,
            o: code.o,
            reason: format!("order index outside 1..={}", factorial(k)),
        });
    }
    let mut rank = code.o - 1;
    let mut out = Vec::with_capacity(k);
    for p in 0..k {
        let f = factorial(k - 1 - p);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(remaining.remove(idx));
    }
    OrderedFocalSet::new(out, frame)
}

/// Number of non-empty permutation events for an n-element frame:
/// Σ_{k=1}^{n} n!/(n−k)!.
pub fn pes_size(n: usize) -> u64 {
    let mut total = 0u64;
    let mut falling = 1u64;
    for k in 1..=n {
        falling *= (n - k + 1) as u64;
        total += falling;
    }
    total
}

/// All non-empty permutation events, ordered by ascending l then o.
///
/// The space grows like e·N!, so enumeration is refused beyond N = 10.
pub fn enumerate_pes(frame: &FrameOfDiscernment) -> Result<Vec<OrderedFocalSet>> {
    let n = frame.size();
    if n > 10 {
        return Err(Error::PesTooLarge { size: n });
    }
    let mut out = Vec::with_capacity(pes_size(n) as usize);
    for l in 1..(1u64 << n) {
        let k = l.count_ones() as usize;
        for o in 1..=factorial(k) {
            out.push(decode_event(EventCode { l, o }, frame)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(n: usize) -> FrameOfDiscernment {
        FrameOfDiscernment::new(n).unwrap()
    }

    fn ofs(elems: &[usize], n: usize) -> OrderedFocalSet {
        OrderedFocalSet::new(elems.to_vec(), &frame(n)).unwrap()
    }

    #[test]
    fn encode_known_codes() {
        assert_eq!(encode_event(&ofs(&[1], 3)), EventCode { l: 1, o: 1 });
        assert_eq!(encode_event(&ofs(&[1, 3], 3)), EventCode { l: 5, o: 1 });
        assert_eq!(encode_event(&ofs(&[3, 1], 3)), EventCode { l: 5, o: 2 });
        assert_eq!(encode_event(&ofs(&[3, 1, 2], 3)), EventCode { l: 7, o: 5 });
    }

    #[test]
    fn decode_known_codes() {
        let f = frame(3);
        assert_eq!(
            decode_event(EventCode { l: 7, o: 4 }, &f)
                .unwrap()
                .elements(),
            &[2, 3, 1]
        );
        assert_eq!(
            decode_event(EventCode { l: 6, o: 2 }, &f)
                .unwrap()
                .elements(),
            &[3, 2]
        );
        assert_eq!(
            decode_event(EventCode { l: 1, o: 1 }, &f)
                .unwrap()
                .elements(),
            &[1]
        );
    }

    #[test]
    fn decode_rejects_bad_codes() {
        let f = frame(3);
        assert!(decode_event(EventCode { l: 0, o: 1 }, &f).is_err());
        assert!(decode_event(EventCode { l: 8, o: 1 }, &f).is_err());
        assert!(decode_event(EventCode { l: 7, o: 7 }, &f).is_err());
        assert!(decode_event(EventCode { l: 7, o: 0 }, &f).is_err());
    }

    #[test]
    fn event_validation() {
        let f = frame(3);
        assert!(OrderedFocalSet::new(vec![], &f).is_err());
        assert!(OrderedFocalSet::new(vec![4], &f).is_err());
        assert!(OrderedFocalSet::new(vec![0], &f).is_err());
        assert!(OrderedFocalSet::new(vec![2, 2], &f).is_err());
    }

    #[test]
    fn pes_sizes() {
        assert_eq!(pes_size(1), 1);
        assert_eq!(pes_size(2), 4);
        assert_eq!(pes_size(3), 15);
        assert_eq!(pes_size(6), 1956);
        assert_eq!(pes_size(7), 13699);
    }

    #[test]
    fn pes_order_matches_encoding_table() {
        let f = frame(3);
        let pes = enumerate_pes(&f).unwrap();
        assert_eq!(pes.len(), 15);
        // canonical positions for the 3-element frame
        assert_eq!(pes[0].elements(), &[1]);
        assert_eq!(pes[1].elements(), &[2]);
        assert_eq!(pes[2].elements(), &[1, 2]);
        assert_eq!(pes[3].elements(), &[2, 1]);
        assert_eq!(pes[9].elements(), &[1, 2, 3]);
        assert_eq!(pes[14].elements(), &[3, 2, 1]);

        let f2 = frame(2);
        let pes2: Vec<_> = enumerate_pes(&f2)
            .unwrap()
            .iter()
            .map(|e| e.elements().to_vec())
            .collect();
        assert_eq!(pes2, vec![vec![1], vec![2], vec![1, 2], vec![2, 1]]);

        let f1 = frame(1);
        assert_eq!(enumerate_pes(&f1).unwrap().len(), 1);
    }

    #[test]
    fn codec_bijective_small_frames() {
        for n in 1..=5 {
            let f = frame(n);
            for e in enumerate_pes(&f).unwrap() {
                let c = encode_event(&e);
                assert_eq!(decode_event(c, &f).unwrap(), e);
                assert_eq!(encode_event(&decode_event(c, &f).unwrap()), c);
            }
        }
    }

    #[test]
    fn display_forms() {
        let f = frame(3);
        assert_eq!(ofs(&[1, 3], 3).display(&f), "(τ₁τ₃)");
        let g = FrameOfDiscernment::with_labels(vec!["red".into(), "blue".into()]).unwrap();
        let e = OrderedFocalSet::new(vec![2, 1], &g).unwrap();
        assert_eq!(e.display(&g), "(blue red)");
    }
}
