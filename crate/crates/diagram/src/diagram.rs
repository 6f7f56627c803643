//! The validated G-Kirby diagram type.

use std::fmt;

use crate::error::{DiagramError, ValidationError};
use crate::group::{GroupElement, LabelGroup};
use crate::trace::{StrandEnd, Trace};
use crate::word::{Event, Slice};

/// A G-Kirby diagram presented as a Morse word.
///
/// Undotted components are numbered `C1, C2, …` in order of their first strand
/// (lowest boundary, then leftmost position); dotted discs are numbered
/// `D1, D2, …` in marker order. Values of this type are always validated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GKirbyDiagram {
    group: LabelGroup,
    slices: Vec<Slice>,
    labels: Vec<GroupElement>,
    trace: Trace,
}

/// A crossing located in a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingSite {
    /// Slice index.
    pub slice: usize,
    /// Left input position.
    pub position: usize,
    /// Oriented sign `±1`.
    pub sign: i64,
    /// Strand entering from the lower left.
    pub left: StrandEnd,
    /// Strand entering from the lower right.
    pub right: StrandEnd,
}

impl CrossingSite {
    /// Whether the strand entering from the lower left passes over.
    pub fn left_over(&self) -> bool {
        self.sign * dir(self.left.up) * dir(self.right.up) > 0
    }
}

fn dir(up: bool) -> i64 {
    if up {
        1
    } else {
        -1
    }
}

impl GKirbyDiagram {
    /// Builds and validates a diagram from its slices and component labels.
    ///
    /// Missing trailing labels default to zero.
    pub fn new(group: LabelGroup, slices: Vec<Slice>, labels: Vec<GroupElement>) -> Result<Self, DiagramError> {
        let trace = Trace::build(&slices)?;
        let n = trace.component_count();
        if labels.len() > n {
            return Err(ValidationError::BadLabels(format!("{} labels for {} components", labels.len(), n)).into());
        }
        let mut full = labels;
        full.resize(n, group.zero());
        if let Some(bad) = full.iter().find(|x| !group.contains(x)) {
            return Err(ValidationError::BadLabels(format!("{bad:?} is not in {group}")).into());
        }
        let d = GKirbyDiagram { group, slices, labels: full, trace };
        d.check_cocycle()?;
        Ok(d)
    }

    /// The empty diagram over a group.
    pub fn empty(group: LabelGroup) -> Self {
        GKirbyDiagram::new(group, Vec::new(), Vec::new()).expect("empty word is valid")
    }

    fn check_cocycle(&self) -> Result<(), ValidationError> {
        for (i, site) in self.trace.dots().iter().enumerate() {
            let sum = self.disc_sum(site.slice, site.position, site.width, &self.labels);
            if sum != self.group.zero() {
                return Err(ValidationError::Cocycle { disc: i + 1, sum: self.group.format_element(&sum) });
            }
        }
        Ok(())
    }

    fn disc_sum(&self, slice: usize, position: usize, width: usize, labels: &[GroupElement]) -> GroupElement {
        let mut sum = self.group.zero();
        for end in &self.trace.ends(slice)[position..position + width] {
            sum = self.group.add(&sum, &self.group.signed(&labels[end.component], end.up));
        }
        sum
    }

    /// Whether a label vector satisfies the cocycle condition at every disc.
    pub fn satisfies_cocycle(&self, labels: &[GroupElement]) -> bool {
        labels.len() == self.component_count()
            && labels.iter().all(|x| self.group.contains(x))
            && self
                .trace
                .dots()
                .iter()
                .all(|s| self.disc_sum(s.slice, s.position, s.width, labels) == self.group.zero())
    }

    /// All label vectors satisfying the cocycle condition, in lexicographic order.
    pub fn cocycle_labelings(&self) -> Vec<Vec<GroupElement>> {
        self.group.vectors(self.component_count()).into_iter().filter(|v| self.satisfies_cocycle(v)).collect()
    }

    /// The same word with new component labels.
    pub fn with_labels(&self, labels: Vec<GroupElement>) -> Result<Self, DiagramError> {
        if labels.len() != self.component_count() {
            return Err(ValidationError::BadLabels(format!(
                "{} labels for {} components",
                labels.len(),
                self.component_count()
            ))
            .into());
        }
        GKirbyDiagram::new(self.group.clone(), self.slices.clone(), labels)
    }

    /// The same word and labels over another group.
    pub fn with_group(&self, group: LabelGroup, labels: Vec<GroupElement>) -> Result<Self, DiagramError> {
        GKirbyDiagram::new(group, self.slices.clone(), labels)
    }

    /// The label group.
    pub fn group(&self) -> &LabelGroup {
        &self.group
    }

    /// The slices, bottom to top.
    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// Labels of the undotted components.
    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    /// Labels as residues, for rank-one groups; the trivial group gives zeros.
    pub fn label_residues(&self) -> Vec<u32> {
        self.labels.iter().map(|x| x.0.first().copied().unwrap_or(0)).collect()
    }

    /// The derived component structure.
    pub fn trace(&self) -> &Trace {
        &self.trace
    }

    /// Number of undotted components.
    pub fn component_count(&self) -> usize {
        self.trace.component_count()
    }

    /// Number of dotted components.
    pub fn dotted_count(&self) -> usize {
        self.trace.dots().len()
    }

    /// Whether the diagram has no dotted components.
    pub fn is_dot_free(&self) -> bool {
        self.dotted_count() == 0
    }

    /// Number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.crossings().len()
    }

    /// Euler characteristic `1 - #dotted + #undotted` of the handlebody.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.dotted_count() as i64 + self.component_count() as i64
    }

    /// All crossings in slice order.
    pub fn crossings(&self) -> Vec<CrossingSite> {
        let mut out = Vec::new();
        for (s, slice) in self.slices.iter().enumerate() {
            for (event, i, _) in slice.placed() {
                if let Event::Cross(sign) = event {
                    let ends = self.trace.ends(s);
                    out.push(CrossingSite { slice: s, position: i, sign: sign.value(), left: ends[i], right: ends[i + 1] });
                }
            }
        }
        out
    }

    /// Serializes the diagram in the grammar read by [`crate::parse`].
    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.group.is_trivial() {
            out.push_str(&format!("group {}\n", self.group));
            for (i, x) in self.labels.iter().enumerate() {
                out.push_str(&format!("label C{} = {}\n", i + 1, self.group.format_element(x)));
            }
        }
        for slice in &self.slices {
            out.push_str(&slice.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for GKirbyDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
