//! G-Kirby diagrams of 4-dimensional 2-handlebodies as Morse words.
//!
//! A diagram is a sequence of slices read bottom to top. Undotted components
//! are closed oriented curves built from cups, caps, crossings and straight
//! strands, each labeled by an element of a finite abelian group. Dotted
//! components (1-handles) are recorded only as disc markers pierced by
//! adjacent strands; the signed sum of pierced labels must vanish.
//!
//! ```
//! use diagram::{linking_matrix, parse};
//!
//! let hopf = parse("cup> cup> / | x+ | / | x+ | / cap> cap>").unwrap();
//! assert_eq!(linking_matrix(&hopf).matrix(), &[vec![0, 1], vec![1, 0]]);
//! assert_eq!(hopf.euler_characteristic(), 3);
//! ```

pub mod error;
pub mod group;
pub mod word;

mod diagram;
mod link;
mod moves;
mod parse;
mod trace;

pub use diagram::{CrossingSite, GKirbyDiagram};
pub use error::{DiagramError, ValidationError};
pub use group::{GroupElement, LabelGroup};
pub use link::{linking_matrix, signature, LinkData};
pub use moves::{connected_sum_cp2, disjoint_union, reverse_component, stabilize_gk2, trade_handles, Gk2Site, TradedHandles};
pub use parse::parse;
pub use trace::{DotSite, StrandEnd, Trace};
pub use word::{Event, Sign, Slice, Turn};
