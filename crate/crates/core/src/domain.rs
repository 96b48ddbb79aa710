//! Shared domain types: brands, personas, quotes, segmentations, and
//! slogan candidates. No I/O and no model calls live here.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Product domain of a brand. Exactly eight labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BrandDomain {
    Beauty,
    Baby,
    Appliance,
    Clothing,
    Furniture,
    Household,
    Nutrition,
    Electronics,
}

impl BrandDomain {
    pub const ALL: [BrandDomain; 8] = [
        BrandDomain::Beauty,
        BrandDomain::Baby,
        BrandDomain::Appliance,
        BrandDomain::Clothing,
        BrandDomain::Furniture,
        BrandDomain::Household,
        BrandDomain::Nutrition,
        BrandDomain::Electronics,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BrandDomain::Beauty => "beauty",
            BrandDomain::Baby => "baby",
            BrandDomain::Appliance => "appliance",
            BrandDomain::Clothing => "clothing",
            BrandDomain::Furniture => "furniture",
            BrandDomain::Household => "household",
            BrandDomain::Nutrition => "nutrition",
            BrandDomain::Electronics => "electronics",
        }
    }
}

impl std::fmt::Display for BrandDomain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for BrandDomain {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BrandDomain::ALL
            .iter()
            .copied()
            .find(|d| d.as_str() == s.trim().to_lowercase())
            .ok_or_else(|| DomainError::UnknownDomain(s.to_string()))
    }
}

/// Target emotional tone of a slogan. Exactly five labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PersonaLabel {
    Pride,
    Anticipation,
    Fear,
    Joy,
    Trust,
}

impl PersonaLabel {
    pub const ALL: [PersonaLabel; 5] = [
        PersonaLabel::Pride,
        PersonaLabel::Anticipation,
        PersonaLabel::Fear,
        PersonaLabel::Joy,
        PersonaLabel::Trust,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PersonaLabel::Pride => "Pride",
            PersonaLabel::Anticipation => "Anticipation",
            PersonaLabel::Fear => "Fear",
            PersonaLabel::Joy => "Joy",
            PersonaLabel::Trust => "Trust",
        }
    }
}

impl std::fmt::Display for PersonaLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PersonaLabel {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let want = s.trim().to_lowercase();
        PersonaLabel::ALL
            .iter()
            .copied()
            .find(|p| p.as_str().to_lowercase() == want)
            .ok_or_else(|| DomainError::UnknownPersona(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DomainError {
    #[error("{0} must be non-empty")]
    EmptyField(&'static str),
    #[error("unknown brand domain {0:?} (expected one of the eight labels)")]
    UnknownDomain(String),
    #[error("unknown persona {0:?} (expected Pride, Anticipation, Fear, Joy, or Trust)")]
    UnknownPersona(String),
    #[error("quote has {words} words, outside the hard bound [{min}, {max}]: {text:?}")]
    QuoteWordCount {
        words: usize,
        min: usize,
        max: usize,
        text: String,
    },
    #[error("slogan set mixes cells: expected {expected}, found {found}")]
    MixedCell { expected: String, found: String },
    #[error("slogan set must contain at least one slogan")]
    EmptySet,
    #[error("remix slogan must end with terminal punctuation: {0:?}")]
    MissingTerminalPunctuation(String),
    #[error("remix slogan must mention the brand name or a configured keyword: {0:?}")]
    MissingBrandMention(String),
    #[error("starred quote is not among the matched quotes: {0:?}")]
    StarredQuoteNotMatched(String),
    #[error("replacement {index} does not point at an editable segment")]
    ReplacementIndexNotEditable { index: usize },
    #[error("transcript is missing the END_OF_REMIX sentinel")]
    MissingSentinel,
}

/// A brand with its product domain and replacement-ready keywords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBrand")]
pub struct Brand {
    name: String,
    domain: BrandDomain,
    keywords: Vec<String>,
}

#[derive(Deserialize)]
struct RawBrand {
    name: String,
    domain: BrandDomain,
    #[serde(default)]
    keywords: Vec<String>,
}

impl TryFrom<RawBrand> for Brand {
    type Error = DomainError;

    fn try_from(raw: RawBrand) -> Result<Self, Self::Error> {
        Brand::new(raw.name, raw.domain, raw.keywords)
    }
}

impl Brand {
    pub fn new(
        name: impl Into<String>,
        domain: BrandDomain,
        keywords: Vec<String>,
    ) -> Result<Self, DomainError> {
        let name = name.into().trim().to_string();
        if name.is_empty() {
            return Err(DomainError::EmptyField("brand name"));
        }
        Ok(Brand {
            name,
            domain,
            keywords,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> BrandDomain {
        self.domain
    }

    pub fn keywords(&self) -> &[String] {
        &self.keywords
    }

    /// True when `text` contains the brand name or any keyword as
    /// whole normalized words (multi-word names match as a window).
    pub fn is_mentioned_in(&self, text: &str) -> bool {
        let words = normalize_words(text);
        let mut needles: Vec<Vec<String>> = vec![normalize_words(&self.name)];
        needles.extend(self.keywords.iter().map(|k| normalize_words(k)));
        needles
            .iter()
            .filter(|n| !n.is_empty())
            .any(|needle| contains_window(&words, needle))
    }
}

fn contains_window(haystack: &[String], needle: &[String]) -> bool {
    needle.len() <= haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

/// A persona label plus the free-text emotion goal injected into prompts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPersona")]
pub struct Persona {
    label: PersonaLabel,
    guideline: String,
}

#[derive(Deserialize)]
struct RawPersona {
    label: PersonaLabel,
    guideline: String,
}

impl TryFrom<RawPersona> for Persona {
    type Error = DomainError;

    fn try_from(raw: RawPersona) -> Result<Self, Self::Error> {
        Persona::new(raw.label, raw.guideline)
    }
}

impl Persona {
    pub fn new(label: PersonaLabel, guideline: impl Into<String>) -> Result<Self, DomainError> {
        let guideline = guideline.into().trim().to_string();
        if guideline.is_empty() {
            return Err(DomainError::EmptyField("persona guideline"));
        }
        Ok(Persona { label, guideline })
    }

    pub fn label(&self) -> PersonaLabel {
        self.label
    }

    pub fn guideline(&self) -> &str {
        &self.guideline
    }
}

/// Word-count bounds applied when accepting a proposed quote. The
/// soft bound only flags; the hard bound rejects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuoteBounds {
    pub soft_min: usize,
    pub soft_max: usize,
    pub hard_min: usize,
    pub hard_max: usize,
}

impl Default for QuoteBounds {
    fn default() -> Self {
        QuoteBounds {
            soft_min: 5,
            soft_max: 10,
            hard_min: 2,
            hard_max: 25,
        }
    }
}

/// A famous quote proposed as remix material.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawQuote")]
pub struct Quote {
    text: String,
    author: String,
    rationale: String,
    word_count: usize,
}

#[derive(Deserialize)]
struct RawQuote {
    text: String,
    author: String,
    #[serde(default)]
    rationale: String,
}

impl TryFrom<RawQuote> for Quote {
    type Error = DomainError;

    fn try_from(raw: RawQuote) -> Result<Self, Self::Error> {
        Quote::new(raw.text, raw.author, raw.rationale)
    }
}

impl Quote {
    pub fn new(
        text: impl Into<String>,
        author: impl Into<String>,
        rationale: impl Into<String>,
    ) -> Result<Self, DomainError> {
        Self::with_bounds(text, author, rationale, &QuoteBounds::default())
    }

    pub fn with_bounds(
        text: impl Into<String>,
        author: impl Into<String>,
        rationale: impl Into<String>,
        bounds: &QuoteBounds,
    ) -> Result<Self, DomainError> {
        let text = text.into().trim().to_string();
        let author = author.into().trim().to_string();
        if text.is_empty() {
            return Err(DomainError::EmptyField("quote text"));
        }
        if author.is_empty() {
            return Err(DomainError::EmptyField("quote author"));
        }
        let word_count = normalize_words(&text).len();
        if word_count < bounds.hard_min || word_count > bounds.hard_max {
            return Err(DomainError::QuoteWordCount {
                words: word_count,
                min: bounds.hard_min,
                max: bounds.hard_max,
                text,
            });
        }
        Ok(Quote {
            text,
            author,
            rationale: rationale.into(),
            word_count,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn author(&self) -> &str {
        &self.author
    }

    pub fn rationale(&self) -> &str {
        &self.rationale
    }

    pub fn word_count(&self) -> usize {
        self.word_count
    }

    /// Whether the recorded word count sits inside the soft [5, 10] band.
    pub fn within_soft_bounds(&self, bounds: &QuoteBounds) -> bool {
        self.word_count >= bounds.soft_min && self.word_count <= bounds.soft_max
    }
}

/// One piece of a segmented quote.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub text: String,
    pub editable: bool,
}

impl Segment {
    pub fn fixed(text: impl Into<String>) -> Self {
        Segment {
            text: text.into(),
            editable: false,
        }
    }

    pub fn editable(text: impl Into<String>) -> Self {
        Segment {
            text: text.into(),
            editable: true,
        }
    }
}

/// A source quote split into ordered fixed/editable segments.
///
/// Construction is deliberately lenient: segmentations come from model
/// output and are checked afterwards with [`validate_segmentation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuoteSegmentation {
    pub segments: Vec<Segment>,
    pub source: Quote,
}

impl QuoteSegmentation {
    pub fn new(segments: Vec<Segment>, source: Quote) -> Self {
        QuoteSegmentation { segments, source }
    }

    /// Segment texts joined on single spaces.
    pub fn reconstructed(&self) -> String {
        self.segments
            .iter()
            .map(|s| s.text.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn editable_indices(&self) -> Vec<usize> {
        self.segments
            .iter()
            .enumerate()
            .filter(|(_, s)| s.editable)
            .map(|(i, _)| i)
            .collect()
    }
}

/// An invariant violated by a [`QuoteSegmentation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentationViolation {
    /// Joining the segments does not reproduce the source text
    /// (after whitespace normalization).
    ReconstructionMismatch { expected: String, actual: String },
    NoEditableSegment,
    NoFixedSegment,
}

impl std::fmt::Display for SegmentationViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SegmentationViolation::ReconstructionMismatch { expected, actual } => {
                write!(f, "reconstruction mismatch: expected {expected:?}, got {actual:?}")
            }
            SegmentationViolation::NoEditableSegment => write!(f, "no editable segment"),
            SegmentationViolation::NoFixedSegment => write!(f, "no fixed segment"),
        }
    }
}

/// Checks a segmentation against its three invariants and returns every
/// violation found. Total function: never errors.
pub fn validate_segmentation(seg: &QuoteSegmentation) -> Result<(), Vec<SegmentationViolation>> {
    let mut violations = Vec::new();
    let expected = normalize_whitespace(seg.source.text());
    let actual = normalize_whitespace(&seg.reconstructed());
    if expected != actual {
        violations.push(SegmentationViolation::ReconstructionMismatch { expected, actual });
    }
    if !seg.segments.iter().any(|s| s.editable) {
        violations.push(SegmentationViolation::NoEditableSegment);
    }
    if !seg.segments.iter().any(|s| !s.editable) {
        violations.push(SegmentationViolation::NoFixedSegment);
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Collapses all whitespace runs to single spaces and trims the ends.
pub fn normalize_whitespace(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// The shared tokenizer used by every metric and edit count: lowercase
/// each whitespace-separated token, strip leading/trailing
/// non-alphanumeric characters, drop tokens that end up empty.
///
/// Idempotent on its own joined output.
pub fn normalize_words(text: &str) -> Vec<String> {
    text.split_whitespace()
        .filter_map(|token| {
            let lowered = token.to_lowercase();
            let trimmed = lowered.trim_matches(|c: char| !c.is_alphanumeric());
            if trimmed.is_empty() {
                None
            } else {
                Some(trimmed.to_string())
            }
        })
        .collect()
}

/// One vocabulary replacement applied inside an editable segment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replacement {
    /// Index into the segmentation's segment list.
    pub segment_index: usize,
    pub original: String,
    pub replacement: String,
    pub reason: String,
}

/// Full remix provenance for one slogan candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRemixTrace")]
pub struct RemixTrace {
    matched_quotes: Vec<Quote>,
    starred_quote: Quote,
    segmentation: QuoteSegmentation,
    replacements: Vec<Replacement>,
    final_slogan: String,
    raw_transcript: String,
}

#[derive(Deserialize)]
struct RawRemixTrace {
    matched_quotes: Vec<Quote>,
    starred_quote: Quote,
    segmentation: QuoteSegmentation,
    replacements: Vec<Replacement>,
    final_slogan: String,
    raw_transcript: String,
}

impl TryFrom<RawRemixTrace> for RemixTrace {
    type Error = DomainError;

    fn try_from(raw: RawRemixTrace) -> Result<Self, Self::Error> {
        RemixTrace::new(
            raw.matched_quotes,
            raw.starred_quote,
            raw.segmentation,
            raw.replacements,
            raw.final_slogan,
            raw.raw_transcript,
        )
    }
}

/// Sentinel the model must emit after the final slogan.
pub const END_OF_REMIX: &str = "END_OF_REMIX";

impl RemixTrace {
    pub fn new(
        matched_quotes: Vec<Quote>,
        starred_quote: Quote,
        segmentation: QuoteSegmentation,
        replacements: Vec<Replacement>,
        final_slogan: impl Into<String>,
        raw_transcript: impl Into<String>,
    ) -> Result<Self, DomainError> {
        let final_slogan = final_slogan.into();
        let raw_transcript = raw_transcript.into();
        let starred_norm = normalize_words(starred_quote.text());
        if !matched_quotes
            .iter()
            .any(|q| normalize_words(q.text()) == starred_norm)
        {
            return Err(DomainError::StarredQuoteNotMatched(
                starred_quote.text().to_string(),
            ));
        }
        for r in &replacements {
            match segmentation.segments.get(r.segment_index) {
                Some(seg) if seg.editable => {}
                _ => {
                    return Err(DomainError::ReplacementIndexNotEditable {
                        index: r.segment_index,
                    })
                }
            }
        }
        if !raw_transcript.contains(END_OF_REMIX) {
            return Err(DomainError::MissingSentinel);
        }
        Ok(RemixTrace {
            matched_quotes,
            starred_quote,
            segmentation,
            replacements,
            final_slogan,
            raw_transcript,
        })
    }

    pub fn matched_quotes(&self) -> &[Quote] {
        &self.matched_quotes
    }

    pub fn starred_quote(&self) -> &Quote {
        &self.starred_quote
    }

    pub fn segmentation(&self) -> &QuoteSegmentation {
        &self.segmentation
    }

    pub fn replacements(&self) -> &[Replacement] {
        &self.replacements
    }

    pub fn final_slogan(&self) -> &str {
        &self.final_slogan
    }

    pub fn raw_transcript(&self) -> &str {
        &self.raw_transcript
    }
}

/// How a slogan was produced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "name", rename_all = "snake_case")]
pub enum SourceMethod {
    Remix,
    Baseline(String),
}

impl std::fmt::Display for SourceMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SourceMethod::Remix => f.write_str("remix"),
            SourceMethod::Baseline(name) => write!(f, "baseline:{name}"),
        }
    }
}

/// Whether a slogan ends with terminal punctuation (after trimming).
pub fn ends_with_terminal_punctuation(text: &str) -> bool {
    matches!(
        text.trim_end().chars().last(),
        Some('.') | Some('!') | Some('?') | Some('…')
    )
}

/// One generated slogan plus its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSloganCandidate")]
pub struct SloganCandidate {
    text: String,
    brand: Brand,
    persona: Persona,
    trace: Option<RemixTrace>,
    source_method: SourceMethod,
}

#[derive(Deserialize)]
struct RawSloganCandidate {
    text: String,
    brand: Brand,
    persona: Persona,
    trace: Option<RemixTrace>,
    source_method: SourceMethod,
}

impl TryFrom<RawSloganCandidate> for SloganCandidate {
    type Error = DomainError;

    fn try_from(raw: RawSloganCandidate) -> Result<Self, Self::Error> {
        SloganCandidate::new(raw.text, raw.brand, raw.persona, raw.trace, raw.source_method)
    }
}

impl SloganCandidate {
    pub fn new(
        text: impl Into<String>,
        brand: Brand,
        persona: Persona,
        trace: Option<RemixTrace>,
        source_method: SourceMethod,
    ) -> Result<Self, DomainError> {
        let text = text.into().trim().to_string();
        if text.is_empty() {
            return Err(DomainError::EmptyField("slogan text"));
        }
        if source_method == SourceMethod::Remix {
            if !ends_with_terminal_punctuation(&text) {
                return Err(DomainError::MissingTerminalPunctuation(text));
            }
            if !brand.is_mentioned_in(&text) {
                return Err(DomainError::MissingBrandMention(text));
            }
        }
        Ok(SloganCandidate {
            text,
            brand,
            persona,
            trace,
            source_method,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn brand(&self) -> &Brand {
        &self.brand
    }

    pub fn persona(&self) -> &Persona {
        &self.persona
    }

    pub fn trace(&self) -> Option<&RemixTrace> {
        self.trace.as_ref()
    }

    pub fn source_method(&self) -> &SourceMethod {
        &self.source_method
    }

    pub fn normalized_text(&self) -> String {
        normalize_words(&self.text).join(" ")
    }
}

/// The slogans generated for one (brand, persona) cell.
///
/// A set may hold a single slogan (shortfall runs); the diversity
/// metrics themselves require at least two.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSloganSet")]
pub struct SloganSet {
    brand: Brand,
    persona: Persona,
    slogans: Vec<SloganCandidate>,
}

#[derive(Deserialize)]
struct RawSloganSet {
    brand: Brand,
    persona: Persona,
    slogans: Vec<SloganCandidate>,
}

impl TryFrom<RawSloganSet> for SloganSet {
    type Error = DomainError;

    fn try_from(raw: RawSloganSet) -> Result<Self, Self::Error> {
        SloganSet::new(raw.brand, raw.persona, raw.slogans)
    }
}

impl SloganSet {
    pub fn new(
        brand: Brand,
        persona: Persona,
        slogans: Vec<SloganCandidate>,
    ) -> Result<Self, DomainError> {
        if slogans.is_empty() {
            return Err(DomainError::EmptySet);
        }
        for s in &slogans {
            if s.brand() != &brand || s.persona() != &persona {
                return Err(DomainError::MixedCell {
                    expected: format!("{} × {}", brand.name(), persona.label()),
                    found: format!("{} × {}", s.brand().name(), s.persona().label()),
                });
            }
        }
        Ok(SloganSet {
            brand,
            persona,
            slogans,
        })
    }

    pub fn brand(&self) -> &Brand {
        &self.brand
    }

    pub fn persona(&self) -> &Persona {
        &self.persona
    }

    pub fn slogans(&self) -> &[SloganCandidate] {
        &self.slogans
    }

    pub fn len(&self) -> usize {
        self.slogans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slogans.is_empty()
    }

    pub fn texts(&self) -> Vec<&str> {
        self.slogans.iter().map(|s| s.text()).collect()
    }

    /// Normalized word lists for every slogan, in set order.
    pub fn normalized(&self) -> Vec<Vec<String>> {
        self.slogans
            .iter()
            .map(|s| normalize_words(s.text()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brand(name: &str) -> Brand {
        Brand::new(name, BrandDomain::Clothing, vec!["style".into()]).unwrap()
    }

    fn persona(label: PersonaLabel) -> Persona {
        Persona::new(label, "test guideline").unwrap()
    }

    #[test]
    fn normalize_words_examples() {
        assert_eq!(normalize_words("DKNY never sleeps."), vec!["dkny", "never", "sleeps"]);
        assert_eq!(normalize_words(""), Vec::<String>::new());
        assert_eq!(
            normalize_words("Stay hungry, stay foolish."),
            vec!["stay", "hungry", "stay", "foolish"]
        );
    }

    #[test]
    fn normalize_words_drops_pure_punctuation_tokens() {
        assert_eq!(normalize_words("hello — world !!"), vec!["hello", "world"]);
    }

    #[test]
    fn normalize_words_keeps_interior_punctuation() {
        assert_eq!(normalize_words("Don’t wait."), vec!["don’t", "wait"]);
    }

    proptest! {
        #[test]
        fn normalize_words_idempotent(text in "\\PC{0,60}") {
            let once = normalize_words(&text);
            let twice = normalize_words(&once.join(" "));
            prop_assert_eq!(once, twice);
        }
    }

    #[test]
    fn segmentation_accepts_the_shelley_split() {
        let quote = Quote::new("If winter comes, can spring be far behind?", "Percy Bysshe Shelley", "").unwrap();
        let seg = QuoteSegmentation::new(
            vec![
                Segment::fixed("If winter comes,"),
                Segment::editable("can spring"),
                Segment::fixed("be far behind?"),
            ],
            quote,
        );
        assert!(validate_segmentation(&seg).is_ok());
    }

    #[test]
    fn segmentation_flags_missing_editable() {
        let quote = Quote::new("x y", "a", "").unwrap();
        let seg = QuoteSegmentation::new(vec![Segment::fixed("x y")], quote);
        let violations = validate_segmentation(&seg).unwrap_err();
        assert!(violations.contains(&SegmentationViolation::NoEditableSegment));
    }

    #[test]
    fn segmentation_flags_reconstruction_mismatch() {
        let quote = Quote::new("a b c", "a", "").unwrap();
        let seg = QuoteSegmentation::new(
            vec![Segment::editable("a"), Segment::fixed("c")],
            quote,
        );
        let violations = validate_segmentation(&seg).unwrap_err();
        assert!(matches!(
            violations[0],
            SegmentationViolation::ReconstructionMismatch { .. }
        ));
    }

    #[test]
    fn quote_hard_bounds_reject() {
        let long = "one two three four five six seven eight nine ten eleven twelve thirteen \
                    fourteen fifteen sixteen seventeen eighteen nineteen twenty twentyone \
                    twentytwo twentythree twentyfour twentyfive twentysix";
        assert!(matches!(
            Quote::new(long, "a", ""),
            Err(DomainError::QuoteWordCount { .. })
        ));
        assert!(matches!(
            Quote::new("single", "a", ""),
            Err(DomainError::QuoteWordCount { .. })
        ));
    }

    #[test]
    fn quote_soft_bounds_flag_without_rejecting() {
        let q = Quote::new("There are two trees in front of my house: one is a jujube tree, and the other is also a jujube tree", "Lu Xun", "").unwrap();
        assert!(!q.within_soft_bounds(&QuoteBounds::default()));
        assert_eq!(q.word_count(), 22);
    }

    #[test]
    fn brand_mention_matches_keywords_and_multiword_names() {
        let b = Brand::new("New Balance", BrandDomain::Clothing, vec!["sneakers".into()]).unwrap();
        assert!(b.is_mentioned_in("Run far with New Balance."));
        assert!(b.is_mentioned_in("The best sneakers in town."));
        assert!(!b.is_mentioned_in("Balance your budget."));
    }

    #[test]
    fn remix_candidate_enforces_punctuation_and_brand() {
        let b = brand("DKNY");
        let p = persona(PersonaLabel::Anticipation);
        assert!(SloganCandidate::new("DKNY never sleeps.", b.clone(), p.clone(), None, SourceMethod::Remix).is_ok());
        assert!(matches!(
            SloganCandidate::new("DKNY never sleeps", b.clone(), p.clone(), None, SourceMethod::Remix),
            Err(DomainError::MissingTerminalPunctuation(_))
        ));
        assert!(matches!(
            SloganCandidate::new("Never sleeps.", b.clone(), p.clone(), None, SourceMethod::Remix),
            Err(DomainError::MissingBrandMention(_))
        ));
        // Baselines are exempt from both rules.
        assert!(SloganCandidate::new(
            "Anything goes",
            b,
            p,
            None,
            SourceMethod::Baseline("gpt".into())
        )
        .is_ok());
    }

    #[test]
    fn slogan_set_rejects_mixed_cells() {
        let b = brand("DKNY");
        let p = persona(PersonaLabel::Joy);
        let other = persona(PersonaLabel::Fear);
        let s1 = SloganCandidate::new("DKNY shines.", b.clone(), p.clone(), None, SourceMethod::Remix).unwrap();
        let s2 = SloganCandidate::new("DKNY dares.", b.clone(), other, None, SourceMethod::Remix).unwrap();
        assert!(matches!(
            SloganSet::new(b, p, vec![s1, s2]),
            Err(DomainError::MixedCell { .. })
        ));
    }

    #[test]
    fn roster_label_sets_are_fixed() {
        assert_eq!(BrandDomain::ALL.len(), 8);
        assert_eq!(PersonaLabel::ALL.len(), 5);
        assert!("beauty".parse::<BrandDomain>().is_ok());
        assert!("garden".parse::<BrandDomain>().is_err());
        assert!("Joy".parse::<PersonaLabel>().is_ok());
        assert!("Rage".parse::<PersonaLabel>().is_err());
    }
}
