//! Elementary events of a Morse word.
//!
//! A diagram is read bottom to top. Each slice is a row of events that
//! together consume the strands open below the slice and produce the strands
//! open above it. Extrema carry a turning sense: `>` marks an extremum whose
//! left strand points up and right strand points down, `<` the opposite.
//! Crossing tokens carry the oriented crossing sign.

use std::fmt;

/// Turning sense of a cup or cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    /// Left strand up, right strand down (`>`).
    Clockwise,
    /// Left strand down, right strand up (`<`).
    Counterclockwise,
}

impl Turn {
    /// The opposite turning sense.
    pub fn flip(self) -> Turn {
        match self {
            Turn::Clockwise => Turn::Counterclockwise,
            Turn::Counterclockwise => Turn::Clockwise,
        }
    }

    /// Whether the left strand of the extremum points up.
    pub fn left_up(self) -> bool {
        self == Turn::Clockwise
    }

    fn marker(self) -> char {
        match self {
            Turn::Clockwise => '>',
            Turn::Counterclockwise => '<',
        }
    }
}

/// One event in a slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    /// A minimum creating two strands.
    Cup(Turn),
    /// A maximum closing two strands.
    Cap(Turn),
    /// A crossing of two adjacent strands with the given oriented sign.
    Cross(Sign),
    /// A strand passing straight through.
    Id,
    /// A dotted disc pierced by this many adjacent strands.
    Dot(usize),
}

/// Oriented sign of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// A positive crossing (`x+`).
    Positive,
    /// A negative crossing (`x-`).
    Negative,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    /// The opposite sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// The sign with the given value.
    pub fn from_value(v: i64) -> Sign {
        if v > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl Event {
    /// Number of strands consumed from below and produced above.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Event::Cup(_) => (0, 2),
            Event::Cap(_) => (2, 0),
            Event::Cross(_) => (2, 2),
            Event::Id => (1, 1),
            Event::Dot(k) => (k, k),
        }
    }

    /// Parses a single token.
    pub fn parse_token(token: &str) -> Option<Event> {
        Some(match token {
            "cup>" => Event::Cup(Turn::Clockwise),
            "cup<" => Event::Cup(Turn::Counterclockwise),
            "cap>" => Event::Cap(Turn::Clockwise),
            "cap<" => Event::Cap(Turn::Counterclockwise),
            "x+" => Event::Cross(Sign::Positive),
            "x-" => Event::Cross(Sign::Negative),
            "|" => Event::Id,
            _ => {
                let k = token.strip_prefix("dot(")?.strip_suffix(')')?;
                Event::Dot(k.trim().parse().ok()?)
            }
        })
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Cup(t) => write!(f, "cup{}", t.marker()),
            Event::Cap(t) => write!(f, "cap{}", t.marker()),
            Event::Cross(Sign::Positive) => write!(f, "x+"),
            Event::Cross(Sign::Negative) => write!(f, "x-"),
            Event::Id => write!(f, "|"),
            Event::Dot(k) => write!(f, "dot({k})"),
        }
    }
}

/// One row of events.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slice {
    /// Events from left to right.
    pub events: Vec<Event>,
}

impl Slice {
    /// A slice from its events.
    pub fn new(events: Vec<Event>) -> Self {
        Slice { events }
    }

    /// `left` identity strands, the given events, then `right` identity strands.
    pub fn padded(left: usize, middle: &[Event], right: usize) -> Self {
        let mut events = vec![Event::Id; left];
        events.extend_from_slice(middle);
        events.extend(std::iter::repeat(Event::Id).take(right));
        Slice { events }
    }

    /// Number of strands consumed.
    pub fn width_in(&self) -> usize {
        self.events.iter().map(|e| e.arity().0).sum()
    }

    /// Number of strands produced.
    pub fn width_out(&self) -> usize {
        self.events.iter().map(|e| e.arity().1).sum()
    }

    /// Each event with the first input and first output position it touches.
    pub fn placed(&self) -> Vec<(Event, usize, usize)> {
        let (mut i, mut o) = (0, 0);
        self.events
            .iter()
            .map(|&e| {
                let here = (e, i, o);
                let (a, b) = e.arity();
                i += a;
                o += b;
                here
            })
            .collect()
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.events.iter().map(Event::to_string).collect();
        write!(f, "{}", tokens.join(" "))
    }
}
