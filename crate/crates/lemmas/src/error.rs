use gridlink_core::Vertex;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// The local routing statements realized by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaId {
    /// Seven or eight terminals in a quadrant.
    Crowded78,
    /// Six terminals in a quadrant.
    Crowded6,
    /// Five terminals in a quadrant, one pair designated.
    Crowded5,
    /// `P3□Pk` and two-row frames are weakly 2-linked.
    WeaklyTwoLinked,
    /// `P4□Pk` is 3-path-pairable.
    FourRowPairable,
    /// Two terminals mated onto chosen central cycles, or framed at the
    /// quadrant's apex of either cycle.
    Framing,
    /// Framing for two pairs plus a third terminal sent to the other cycle.
    FramingPlusOne,
    /// Framing for a selected two of three pairs plus a routed third.
    FramingChoice,
    /// Mating into the boundary line `A` in `Q0` and the adjusted quadrants.
    BoundaryExit,
    /// Linking one terminal to the middle of `B` while the rest reach `A`.
    Projection,
    /// One pair linked and two terminals mated onto prescribed lines.
    BoundaryLinkage,
}

impl LemmaId {
    pub const ALL: [LemmaId; 11] = [
        LemmaId::Crowded78,
        LemmaId::Crowded6,
        LemmaId::Crowded5,
        LemmaId::WeaklyTwoLinked,
        LemmaId::FourRowPairable,
        LemmaId::Framing,
        LemmaId::FramingPlusOne,
        LemmaId::FramingChoice,
        LemmaId::BoundaryExit,
        LemmaId::Projection,
        LemmaId::BoundaryLinkage,
    ];

    /// Short identifier used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Crowded78 => "heavy78",
            LemmaId::Crowded6 => "heavy6",
            LemmaId::Crowded5 => "heavy5",
            LemmaId::WeaklyTwoLinked => "w2linked",
            LemmaId::FourRowPairable => "3pp",
            LemmaId::Framing => "frame",
            LemmaId::FramingPlusOne => "12toCa",
            LemmaId::FramingChoice => "Caforpq",
            LemmaId::BoundaryExit => "exit",
            LemmaId::Projection => "heavy4",
            LemmaId::BoundaryLinkage => "boundary",
        }
    }

    /// Accepts the short identifier or a descriptive alias.
    pub fn from_name(s: &str) -> Option<LemmaId> {
        let alias = match s {
            "crowded-78" => Some(LemmaId::Crowded78),
            "crowded-6" => Some(LemmaId::Crowded6),
            "crowded-5" => Some(LemmaId::Crowded5),
            "weakly-2-linked" => Some(LemmaId::WeaklyTwoLinked),
            "four-row-3pp" => Some(LemmaId::FourRowPairable),
            "framing" => Some(LemmaId::Framing),
            "framing-plus-one" => Some(LemmaId::FramingPlusOne),
            "framing-choice" => Some(LemmaId::FramingChoice),
            "boundary-exit" => Some(LemmaId::BoundaryExit),
            "projection" => Some(LemmaId::Projection),
            "boundary-linkage" => Some(LemmaId::BoundaryLinkage),
            _ => None,
        };
        alias.or_else(|| LemmaId::ALL.into_iter().find(|l| l.name().eq_ignore_ascii_case(s)))
    }

    /// One-sentence statement of what is certified.
    pub fn statement(self) -> &'static str {
        match self {
            LemmaId::Crowded78 => {
                "With 7 or 8 terminals in a quadrant, at least two pairs can be linked inside it while \
                 every other terminal escapes along disjoint paths to distinct vertices of the two \
                 boundary lines."
            }
            LemmaId::Crowded6 => {
                "With 6 terminals in a quadrant, at least one pair can be linked inside it while the \
                 others escape to distinct boundary vertices, at most one of them on the vertical \
                 line away from the corner."
            }
            LemmaId::Crowded5 => {
                "With 5 terminals in a quadrant including a designated pair, that pair can be linked \
                 inside it while the other three escape to distinct boundary vertices, at most one \
                 on the vertical line away from the corner."
            }
            LemmaId::WeaklyTwoLinked => {
                "Three-row grids and two-row frames admit edge-disjoint paths for any two vertex \
                 pairs, coincidences allowed."
            }
            LemmaId::FourRowPairable => "Four-row grids with at least four columns route any three pairs.",
            LemmaId::Framing => {
                "Any two quadrant vertices mate onto any chosen central cycles, and also both reach \
                 the quadrant's apex on either cycle, by disjoint paths inside the quadrant that \
                 avoid the 12-cycle's edges."
            }
            LemmaId::FramingPlusOne => {
                "For three distinct terminals of a quadrant, the first two frame onto one central \
                 cycle while the third mates onto the other."
            }
            LemmaId::FramingChoice => {
                "For three distinct terminals of a quadrant, some two frame onto the 4-cycle with the \
                 third reaching the 12-cycle, and some two frame onto the 12-cycle with the third \
                 reaching a prescribed corner."
            }
            LemmaId::BoundaryExit => {
                "After removing the horizontal boundary line's edges, and in each adjusted quadrant, \
                 terminals mate into that line as required."
            }
            LemmaId::Projection => {
                "Up to four terminals of a quadrant without horizontal boundary edges admit one \
                 terminal linked to the middle of the vertical line and the rest mated into the \
                 horizontal line, for the guaranteed choices of the linked terminal."
            }
            LemmaId::BoundaryLinkage => {
                "In a quadrant, one pair links while two further terminals mate to distinct vertices \
                 of prescribed boundary lines."
            }
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum LemmaError {
    /// The search found no plan for a configuration the statement covers.
    #[error("lemma {lemma} violated: {config}")]
    Violation { lemma: LemmaId, config: String },
    /// The projection statement does not guarantee this choice of terminal.
    #[error("linking {s} is not guaranteed for terminal set {terminals:?}")]
    Refused { terminals: Vec<Vertex>, s: Vertex },
    /// Inputs outside the statement's domain.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A plan exists, but none respects the caller's extra restrictions.
    #[error("lemma {lemma}: no plan respects the extra restrictions")]
    Restricted { lemma: LemmaId },
}
