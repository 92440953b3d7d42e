//! Observation maps, the three attack families and the attacked observation
//! map `AP = A ∘ P` together with its inverse-membership test.
//!
//! Replacement-removal attacks act symbol by symbol, so `AP` is multiplicative
//! over words and every question about it reduces to per-event image sets.
//! Insertion-removal attacks produce infinite image sets and are handled
//! through the kernel of the α-removal map instead.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automata::Alphabet;
use crate::error::{Error, Result};
use crate::symbols::{Event, OutputSymbol, OutputWord, SymbolTable, Word};

/// Per-event observation `P: Σ → Δ ∪ {ε}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationMap {
    outputs: SymbolTable,
    table: Vec<Option<OutputSymbol>>,
}

impl ObservationMap {
    /// `table` pairs each event name with an output name; `""` means ε.
    /// Every event of `alphabet` must appear exactly once.
    pub fn new<S, T>(alphabet: &Alphabet, outputs: &[S], table: &[(T, T)]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let outputs = SymbolTable::new(outputs.iter().map(|s| s.as_ref().to_string()))?;
        let mut slots: Vec<Option<Option<OutputSymbol>>> = vec![None; alphabet.len()];
        for (ev, out) in table {
            let e = alphabet.event(ev.as_ref())?;
            let image = match out.as_ref() {
                "" => None,
                name => Some(OutputSymbol(
                    outputs
                        .position(name)
                        .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?,
                )),
            };
            if slots[e.0].replace(image).is_some() {
                return Err(Error::InvalidModel(format!(
                    "event `{}` observed twice",
                    ev.as_ref()
                )));
            }
        }
        let table = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or_else(|| {
                    Error::InvalidModel(format!(
                        "observation map is not total: `{}` missing",
                        alphabet.name(Event(i))
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ObservationMap { outputs, table })
    }

    /// Maps every event to the output symbol of the same name.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let outputs =
            SymbolTable::new(alphabet.names().iter().cloned()).expect("alphabet names are valid");
        let table = (0..alphabet.len()).map(|i| Some(OutputSymbol(i))).collect();
        ObservationMap { outputs, table }
    }

    pub fn image(&self, e: Event) -> Option<OutputSymbol> {
        self.table[e.0]
    }

    pub fn num_events(&self) -> usize {
        self.table.len()
    }

    pub fn outputs(&self) -> impl Iterator<Item = OutputSymbol> {
        (0..self.outputs.len()).map(OutputSymbol)
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn output_names(&self) -> &[String] {
        self.outputs.names()
    }

    pub fn symbol(&self, name: &str) -> Result<OutputSymbol> {
        self.outputs
            .position(name)
            .map(OutputSymbol)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn symbol_name(&self, t: OutputSymbol) -> &str {
        self.outputs.name(t.0)
    }

    /// Parses an output word; `""` and `"ε"` denote the empty word.
    pub fn output_word(&self, text: &str) -> Result<OutputWord> {
        if text.trim() == "ε" {
            return Ok(OutputWord::empty());
        }
        self.outputs
            .tokenize(text)
            .map(|v| v.into_iter().map(OutputSymbol).collect())
            .ok_or_else(|| Error::BadWord(text.to_string()))
    }

    pub fn render(&self, y: &OutputWord) -> String {
        self.outputs.render(y.iter().map(|t| t.0))
    }

    /// `P(w)`: symbol-by-symbol image with ε images deleted.
    pub fn project(&self, w: &Word) -> OutputWord {
        w.iter().filter_map(|e| self.image(e)).collect()
    }

    pub(crate) fn check_outputs(&self, syms: impl IntoIterator<Item = OutputSymbol>) -> Result<()> {
        for t in syms {
            if t.0 >= self.outputs.len() {
                return Err(Error::UnknownSymbol(format!("#{}", t.0)));
            }
        }
        Ok(())
    }
}

/// `P(w)`.
pub fn project(p: &ObservationMap, w: &Word) -> OutputWord {
    p.project(w)
}

/// Replacement-removal map `φ: Δ → 2^(Δ ∪ {ε})`, `None` standing for ε.
/// Every image set is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplacementRemovalMap {
    phi: Vec<BTreeSet<Option<OutputSymbol>>>,
}

impl ReplacementRemovalMap {
    /// Builds φ from one image set per output symbol of `p`, in symbol order.
    pub fn new(p: &ObservationMap, phi: Vec<BTreeSet<Option<OutputSymbol>>>) -> Result<Self> {
        if phi.len() != p.num_outputs() {
            return Err(Error::InvalidModel(format!(
                "replacement map covers {} of {} output symbols",
                phi.len(),
                p.num_outputs()
            )));
        }
        for (i, images) in phi.iter().enumerate() {
            if images.is_empty() {
                return Err(Error::InvalidModel(format!(
                    "empty replacement set for `{}`",
                    p.symbol_name(OutputSymbol(i))
                )));
            }
            p.check_outputs(images.iter().flatten().copied())?;
        }
        Ok(ReplacementRemovalMap { phi })
    }

    /// Builds φ from names; `""` in an image list means ε. Symbols that are
    /// not listed map to themselves.
    pub fn from_names<S: AsRef<str>>(p: &ObservationMap, table: &[(S, &[S])]) -> Result<Self> {
        let mut phi: Vec<BTreeSet<Option<OutputSymbol>>> =
            p.outputs().map(|t| BTreeSet::from([Some(t)])).collect();
        let mut seen = BTreeSet::new();
        for (key, images) in table {
            let t = p.symbol(key.as_ref())?;
            if !seen.insert(t) {
                return Err(Error::InvalidModel(format!(
                    "duplicate replacement entry for `{}`",
                    key.as_ref()
                )));
            }
            phi[t.0] = images
                .iter()
                .map(|s| match s.as_ref() {
                    "" => Ok(None),
                    name => p.symbol(name).map(Some),
                })
                .collect::<Result<_>>()?;
        }
        Self::new(p, phi)
    }

    pub fn images(&self, t: OutputSymbol) -> &BTreeSet<Option<OutputSymbol>> {
        &self.phi[t.0]
    }

    pub fn is_identity(&self) -> bool {
        self.phi
            .iter()
            .enumerate()
            .all(|(i, s)| s.len() == 1 && s.contains(&Some(OutputSymbol(i))))
    }
}

/// Symbols `α ⊂ Δ` an insertion-removal attack may insert or delete freely.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InsertionRemovalSet {
    alpha: BTreeSet<OutputSymbol>,
}

impl InsertionRemovalSet {
    pub fn new(p: &ObservationMap, alpha: impl IntoIterator<Item = OutputSymbol>) -> Result<Self> {
        let alpha: BTreeSet<_> = alpha.into_iter().collect();
        p.check_outputs(alpha.iter().copied())?;
        Ok(InsertionRemovalSet { alpha })
    }

    pub fn from_names<S: AsRef<str>>(p: &ObservationMap, names: &[S]) -> Result<Self> {
        let alpha = names
            .iter()
            .map(|n| p.symbol(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, alpha)
    }

    pub fn contains(&self, t: OutputSymbol) -> bool {
        self.alpha.contains(&t)
    }

    pub fn symbols(&self) -> impl Iterator<Item = OutputSymbol> + '_ {
        self.alpha.iter().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        InsertionRemovalSet {
            alpha: self.alpha.union(&other.alpha).copied().collect(),
        }
    }
}

/// One hypothesized attack on the observation channel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AttackModel {
    Identity,
    ReplacementRemoval(ReplacementRemovalMap),
    InsertionRemoval(InsertionRemovalSet),
}

/// Per-event image sets `AP(e) ⊂ Δ ∪ {ε}` of a finite-image attack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventImages {
    images: Vec<Vec<Option<OutputSymbol>>>,
}

impl EventImages {
    pub fn of(&self, e: Event) -> &[Option<OutputSymbol>] {
        &self.images[e.0]
    }

    pub fn erasable(&self, e: Event) -> bool {
        self.images[e.0].contains(&None)
    }

    pub fn emits(&self, e: Event, t: OutputSymbol) -> bool {
        self.images[e.0].contains(&Some(t))
    }

    /// Images after composing with a further per-symbol map.
    fn map(&self, f: impl Fn(OutputSymbol) -> Option<OutputSymbol>) -> Self {
        let images = self
            .images
            .iter()
            .map(|set| {
                let mapped: BTreeSet<_> = set.iter().map(|o| o.and_then(&f)).collect();
                mapped.into_iter().collect()
            })
            .collect();
        EventImages { images }
    }
}

impl AttackModel {
    pub fn is_insertion_removal(&self) -> bool {
        matches!(self, AttackModel::InsertionRemoval(_))
    }

    /// Images of one output symbol under a finite-image attack.
    fn symbol_images(&self, t: OutputSymbol) -> Vec<Option<OutputSymbol>> {
        match self {
            AttackModel::Identity => vec![Some(t)],
            AttackModel::ReplacementRemoval(phi) => phi.images(t).iter().copied().collect(),
            AttackModel::InsertionRemoval(_) => unreachable!("infinite image set"),
        }
    }

    /// Tabulates `AP(e)` for every event. Insertion-removal attacks have
    /// infinite images and are rejected.
    pub fn event_images(&self, p: &ObservationMap) -> Result<EventImages> {
        if self.is_insertion_removal() {
            return Err(Error::Unsupported(
                "insertion-removal attacks have infinite image sets".into(),
            ));
        }
        let images = (0..p.num_events())
            .map(|i| match p.image(Event(i)) {
                None => vec![None],
                Some(t) => self.symbol_images(t),
            })
            .collect();
        Ok(EventImages { images })
    }
}

/// `AP(w)` for identity and replacement-removal attacks.
pub fn ap_word(a: &AttackModel, p: &ObservationMap, w: &Word) -> Result<BTreeSet<OutputWord>> {
    let images = a.event_images(p).map_err(|_| {
        Error::Unsupported("cannot enumerate AP(w) for an insertion-removal attack".into())
    })?;
    let mut acc = BTreeSet::from([OutputWord::empty()]);
    for e in w.iter() {
        acc = acc
            .iter()
            .flat_map(|y| {
                images.of(e).iter().map(move |o| match o {
                    Some(t) => y.with(*t),
                    None => y.clone(),
                })
            })
            .collect();
    }
    Ok(acc)
}

/// Positions of `y` that a prefix of the plant word can have produced.
///
/// Column `j` is set when the events consumed so far can emit exactly
/// `y[..j]`. Each event emits ε or one symbol drawn from its image set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct AlignmentColumn(Vec<bool>);

impl AlignmentColumn {
    pub(crate) fn start(y: &OutputWord) -> Self {
        let mut col = vec![false; y.len() + 1];
        col[0] = true;
        AlignmentColumn(col)
    }

    pub(crate) fn advance(&self, y: &OutputWord, images: &[Option<OutputSymbol>]) -> Self {
        let mut next = vec![false; self.0.len()];
        for (j, _) in self.0.iter().enumerate().filter(|(_, &b)| b) {
            for o in images {
                match o {
                    None => next[j] = true,
                    Some(t) if j < y.len() && y.symbols()[j] == *t => next[j + 1] = true,
                    Some(_) => {}
                }
            }
        }
        AlignmentColumn(next)
    }

    pub(crate) fn is_dead(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }

    pub(crate) fn complete(&self) -> bool {
        *self.0.last().expect("column is never empty")
    }
}

/// Whether `y ∈ AP(w)`, decided without enumerating `AP(w)`.
pub fn ap_inverse_contains(a: &AttackModel, p: &ObservationMap, w: &Word, y: &OutputWord) -> bool {
    match a {
        AttackModel::InsertionRemoval(alpha) => {
            r_not_alpha(alpha, &p.project(w)) == r_not_alpha(alpha, y)
        }
        _ => {
            let images = a.event_images(p).expect("finite-image attack");
            let mut col = AlignmentColumn::start(y);
            for e in w.iter() {
                col = col.advance(y, images.of(e));
                if col.is_dead() {
                    return false;
                }
            }
            col.complete()
        }
    }
}

/// Whether `ε ∈ AP(e)`.
pub fn epsilon_erasable(a: &AttackModel, p: &ObservationMap, e: Event) -> bool {
    match (p.image(e), a) {
        (None, _) => true,
        (Some(_), AttackModel::Identity) => false,
        (Some(t), AttackModel::ReplacementRemoval(phi)) => phi.images(t).contains(&None),
        (Some(t), AttackModel::InsertionRemoval(alpha)) => alpha.contains(t),
    }
}

/// `R_¬α(u)`: deletes every symbol of α.
pub fn r_not_alpha(alpha: &InsertionRemovalSet, u: &OutputWord) -> OutputWord {
    u.iter().filter(|t| !alpha.contains(*t)).collect()
}

/// The observation map `R_¬α ∘ P`.
pub fn compose_removal_observation(
    alpha: &InsertionRemovalSet,
    p: &ObservationMap,
) -> ObservationMap {
    ObservationMap {
        outputs: p.outputs.clone(),
        table: p
            .table
            .iter()
            .map(|o| o.filter(|t| !alpha.contains(*t)))
            .collect(),
    }
}

/// Given `R_¬(α1∪α2)(v) = R_¬(α1∪α2)(v′)`, builds `y ∈ A_α1(v) ∩ A_α2(v′)`.
///
/// Start from `R_¬α1(v)` and insert the α1-symbols of `v′` between the
/// symbols outside `α1 ∪ α2`, so that removing α1 recovers `R_¬α1(v)` and
/// removing α2 recovers `R_¬α2(v′)`.
pub fn common_corruption_witness(
    alpha1: &InsertionRemovalSet,
    alpha2: &InsertionRemovalSet,
    v: &OutputWord,
    v_prime: &OutputWord,
) -> Result<OutputWord> {
    let both = alpha1.union(alpha2);
    if r_not_alpha(&both, v) != r_not_alpha(&both, v_prime) {
        return Err(Error::NoWitness(
            "the words differ outside the attacked symbols".into(),
        ));
    }
    let y1 = r_not_alpha(alpha1, v);
    let y2 = r_not_alpha(alpha2, v_prime);
    // Both sides share the same sequence of unattacked symbols; interleave
    // their attacked segments between consecutive unattacked symbols.
    let mut out = Vec::with_capacity(y1.len() + y2.len());
    let (mut i, mut j) = (0, 0);
    let (s1, s2) = (y1.symbols(), y2.symbols());
    loop {
        while i < s1.len() && both.contains(s1[i]) {
            out.push(s1[i]);
            i += 1;
        }
        while j < s2.len() && both.contains(s2[j]) {
            out.push(s2[j]);
            j += 1;
        }
        match (s1.get(i), s2.get(j)) {
            (Some(&a), Some(&b)) => {
                debug_assert_eq!(a, b);
                out.push(a);
                i += 1;
                j += 1;
            }
            (None, None) => break,
            _ => unreachable!("unattacked projections agree"),
        }
    }
    Ok(out.into())
}

/// Finds some `y ∈ AP(w) ∩ A′P(w′)` for any combination of attack kinds.
///
/// Finite-image pairs are aligned event by event; insertion-removal pairs go
/// through [`common_corruption_witness`]; mixed pairs align the finite side
/// against the α-kernel of the other.
pub fn common_output(
    a: &AttackModel,
    a_prime: &AttackModel,
    p: &ObservationMap,
    w: &Word,
    w_prime: &Word,
) -> Option<OutputWord> {
    match (a, a_prime) {
        (AttackModel::InsertionRemoval(x), AttackModel::InsertionRemoval(y)) => {
            common_corruption_witness(x, y, &p.project(w), &p.project(w_prime)).ok()
        }
        (AttackModel::InsertionRemoval(alpha), finite) => {
            align_with_kernel(finite, alpha, p, w_prime, &p.project(w))
        }
        (finite, AttackModel::InsertionRemoval(alpha)) => {
            align_with_kernel(finite, alpha, p, w, &p.project(w_prime))
        }
        _ => align_pair(a, a_prime, p, w, w_prime),
    }
}

/// Position pair `(i, j)` in an alignment search.
type Cell = (usize, usize);

/// Shortest-path search over position pairs `(i, j)`.
fn align_pair(
    a: &AttackModel,
    a_prime: &AttackModel,
    p: &ObservationMap,
    w: &Word,
    w_prime: &Word,
) -> Option<OutputWord> {
    let left = a.event_images(p).ok()?;
    let right = a_prime.event_images(p).ok()?;
    let (n, m) = (w.len(), w_prime.len());
    let mut parent: HashMap<Cell, (Cell, Option<OutputSymbol>)> = HashMap::new();
    let mut queue = VecDeque::from([(0, 0)]);
    let mut seen = BTreeSet::from([(0, 0)]);
    while let Some((i, j)) = queue.pop_front() {
        if (i, j) == (n, m) {
            let mut out = Vec::new();
            let mut cur = (n, m);
            while let Some(&(prev, sym)) = parent.get(&cur) {
                out.extend(sym);
                cur = prev;
            }
            out.reverse();
            return Some(out.into());
        }
        let mut moves: Vec<((usize, usize), Option<OutputSymbol>)> = Vec::new();
        if i < n && left.erasable(w.symbols()[i]) {
            moves.push(((i + 1, j), None));
        }
        if j < m && right.erasable(w_prime.symbols()[j]) {
            moves.push(((i, j + 1), None));
        }
        if i < n && j < m {
            let (e, e2) = (w.symbols()[i], w_prime.symbols()[j]);
            if let Some(t) = left.of(e).iter().flatten().find(|t| right.emits(e2, **t)) {
                moves.push(((i + 1, j + 1), Some(*t)));
            }
        }
        for (next, sym) in moves {
            if seen.insert(next) {
                parent.insert(next, ((i, j), sym));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Finds `y ∈ AP(w)` (finite-image `a`) with `R_¬α(y) = target`.
fn align_with_kernel(
    a: &AttackModel,
    alpha: &InsertionRemovalSet,
    p: &ObservationMap,
    w: &Word,
    target: &OutputWord,
) -> Option<OutputWord> {
    let images = a.event_images(p).ok()?;
    let target = r_not_alpha(alpha, target);
    let (n, m) = (w.len(), target.len());
    let mut parent: HashMap<Cell, (Cell, Option<OutputSymbol>)> = HashMap::new();
    let mut queue = VecDeque::from([(0, 0)]);
    let mut seen = BTreeSet::from([(0, 0)]);
    while let Some((i, k)) = queue.pop_front() {
        if (i, k) == (n, m) {
            let mut out = Vec::new();
            let mut cur = (n, m);
            while let Some(&(prev, sym)) = parent.get(&cur) {
                out.extend(sym);
                cur = prev;
            }
            out.reverse();
            return Some(out.into());
        }
        if i == n {
            continue;
        }
        for o in images.of(w.symbols()[i]) {
            let next = match o {
                None => ((i + 1, k), None),
                Some(t) if alpha.contains(*t) => ((i + 1, k), Some(*t)),
                Some(t) if k < m && target.symbols()[k] == *t => ((i + 1, k + 1), Some(*t)),
                Some(_) => continue,
            };
            if seen.insert(next.0) {
                parent.insert(next.0, ((i, k), next.1));
                queue.push_back(next.0);
            }
        }
    }
    None
}

/// Per-event images of one side of an attack pair, mapped into a common key
/// space in which `AP(w) ∩ A′P(w′) ≠ ∅` becomes "the two sides can emit the
/// same key word".
///
/// Finite pairs use the raw output symbols. A pair involving an
/// insertion-removal attack `A_α` (and `A_α′` when both are) uses
/// `R_¬(α ∪ α′)`: the insertion-removal side is deterministic there, and the
/// finite side's images are filtered through the same removal map.
pub(crate) fn keyed_images(
    a: &AttackModel,
    a_prime: &AttackModel,
    p: &ObservationMap,
) -> (EventImages, EventImages) {
    let removal = match (a, a_prime) {
        (AttackModel::InsertionRemoval(x), AttackModel::InsertionRemoval(y)) => Some(x.union(y)),
        (AttackModel::InsertionRemoval(x), _) | (_, AttackModel::InsertionRemoval(x)) => {
            Some(x.clone())
        }
        _ => None,
    };
    let side = |m: &AttackModel| -> EventImages {
        let base = match m {
            AttackModel::InsertionRemoval(_) => AttackModel::Identity.event_images(p),
            finite => finite.event_images(p),
        }
        .expect("finite images");
        match &removal {
            Some(alpha) => base.map(|t| (!alpha.contains(t)).then_some(t)),
            None => base,
        }
    };
    (side(a), side(a_prime))
}
