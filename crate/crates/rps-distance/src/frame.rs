use crate::error::{Error, Result};

/// The element universe τ₁..τ_N with stable 1-based indexing.
///
/// Labels are optional display names; when absent, elements render as
/// "τ" followed by a subscript index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameOfDiscernment {
    size: usize,
    labels: Option<Vec<String>>,
}

impl FrameOfDiscernment {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyFrame);
        }
        Ok(Self { size, labels: None })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        let n = labels.len();
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::BadLabels {
                    expected: n,
                    got: n,
                });
            }
        }
        Ok(Self {
            size: n,
            labels: Some(labels),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label for the 1-based element index.
    pub fn label(&self, index: usize) -> String {
        match &self.labels {
            Some(ls) => ls[index - 1].clone(),
            None => format!("τ{}", subscript(index)),
        }
    }

    /// Resolve a label back to its 1-based index. Default frames also
    /// accept plain "τ3" (no subscript digits).
    pub fn index_of(&self, label: &str) -> Result<usize> {
        if let Some(ls) = &self.labels {
            if let Some(p) = ls.iter().position(|l| l == label) {
                return Ok(p + 1);
            }
        } else if let Some(rest) = label.strip_prefix('τ') {
            let digits: String = rest.chars().map(unsubscript).collect();
            if let Ok(i) = digits.parse::<usize>() {
                if i >= 1 && i <= self.size {
                    return Ok(i);
                }
            }
        }
        Err(Error::UnknownLabel {
            label: label.to_string(),
        })
    }
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + (c as u32 - '0' as u32)).unwrap())
        .collect()
}

fn unsubscript(c: char) -> char {
    match c as u32 {
        u @ 0x2080..=0x2089 => char::from_u32('0' as u32 + (u - 0x2080)).unwrap(),
        _ => c,
    }
}
