#include "eval_core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace recurselab {

namespace {

constexpr int kMaxArity = 12;

// Native recursion depth at which the evaluator starts tracking the set of
// in-progress argument tuples, so that infinite regress is reported before
// the machine stack overflows.
constexpr int kTrackDepth = 4096;

std::int64_t checked_int64(const Rational& r, const char* what) {
  if (denominator(r) != 1)
    throw std::invalid_argument(std::string(what) + ": parameter is not an integer");
  BigInt n = numerator(r);
  if (n < std::numeric_limits<std::int64_t>::min() ||
      n > std::numeric_limits<std::int64_t>::max())
    throw std::invalid_argument(std::string(what) + ": parameter out of range");
  return static_cast<std::int64_t>(n);
}

struct TupleKey {
  int m = 0;
  std::array<std::int64_t, kMaxArity> v{};

  bool operator==(const TupleKey& o) const {
    if (m != o.m) return false;
    return std::equal(v.begin(), v.begin() + m, o.v.begin());
  }
};

struct TupleKeyHash {
  std::size_t operator()(const TupleKey& k) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(k.m);
    for (int i = 0; i < k.m; ++i) {
      std::size_t x = static_cast<std::size_t>(k.v[i]);
      x *= 0xff51afd7ed558ccdull;
      x ^= x >> 33;
      h = h * 0x100000001b3ull ^ x;
    }
    return h;
  }
};

struct FuelSignal {};
struct RegressSignal {};
struct CycleSignal {
  std::vector<std::vector<std::int64_t>> witness;
};

class Evaluator {
 public:
  Evaluator(const SchemaSpec& schema, const EvalOptions& opt, const BigNat& fuel)
      : schema_(schema), opt_(opt) {
    if (fuel <= 0) throw std::invalid_argument("evaluate: fuel must be > 0");
    initial_fuel_ = fuel;
    if (fuel > std::numeric_limits<std::uint64_t>::max())
      fuel_left_ = std::numeric_limits<std::uint64_t>::max();
    else
      fuel_left_ = static_cast<std::uint64_t>(fuel);
    if (schema.family == SchemaSpec::Family::Generalized91) {
      schema.gen91.validate();
      g91_a_ = checked_int64(schema.gen91.a, "Generalized91");
      g91_b_ = checked_int64(schema.gen91.b, "Generalized91");
      g91_c_ = schema.gen91.c;
      g91_d_ = checked_int64(schema.gen91.d, "Generalized91");
    }
  }

  EvalOutcome run(std::span<const std::int64_t> args, Strategy strategy) {
    EvalOutcome out;
    try {
      std::int64_t v = dispatch(args, strategy);
      out.kind = EvalOutcome::Kind::Value;
      out.value = v;
      out.cost.fuel_consumed = total_;
    } catch (const FuelSignal&) {
      out.kind = EvalOutcome::Kind::FuelExhausted;
      out.cost.fuel_consumed = initial_fuel_;
    } catch (const RegressSignal&) {
      // A call re-entered an argument tuple that is still in progress; full
      // expansion would recurse forever, so the whole budget is charged.
      out.kind = EvalOutcome::Kind::FuelExhausted;
      out.cost.fuel_consumed = initial_fuel_;
    } catch (CycleSignal& c) {
      out.kind = EvalOutcome::Kind::CycleDetected;
      out.witness = std::move(c.witness);
      out.cost.fuel_consumed = total_;
    }
    out.cost.else_expansions = elses_;
    out.cost.total_expansions = total_;
    return out;
  }

 private:
  std::int64_t dispatch(std::span<const std::int64_t> args, Strategy strategy) {
    switch (schema_.family) {
      case SchemaSpec::Family::McCarthy91Original:
        set91(100, 10, 2, 11);
        break;
      case SchemaSpec::Family::McCarthy91Modified:
        set91(100, 10, 91, 901);
        break;
      case SchemaSpec::Family::Generalized91:
        set91(g91_a_, g91_b_, g91_c_, g91_d_);
        break;
      default:
        break;
    }
    bool unary = schema_.arity() == 1;
    switch (strategy) {
      case Strategy::FullExpansion:
        if (unary) return full_unary(args[0]);
        return full_tuple(args.data());
      case Strategy::Memoized: {
        std::int64_t v =
            unary ? memo_unary(args[0], false) : memo_tuple(args.data(), false);
        return v;
      }
      case Strategy::CallByNeed:
        return lazy_root(args);
    }
    throw std::logic_error("unknown strategy");
  }

  void set91(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    g91_a_ = a;
    g91_b_ = b;
    g91_c_ = c;
    g91_d_ = d;
  }

  // -- counters ------------------------------------------------------------

  void step() {
    if (fuel_left_ == 0) throw FuelSignal{};
    --fuel_left_;
    ++total_;
  }

  std::int64_t guard(std::int64_t v) const {
    if (v > opt_.guard || v < -opt_.guard)
      throw OverflowError("evaluate: intermediate argument left the guard range");
    return v;
  }

  // -- in-progress tracking ------------------------------------------------

  TupleKey key_of(const std::int64_t* a, int m) const {
    TupleKey k;
    k.m = m;
    std::copy(a, a + m, k.v.begin());
    return k;
  }

  void maybe_start_tracking(int m) {
    if (tracking_ || depth_ < kTrackDepth) return;
    tracking_ = true;
    in_progress_.clear();
    for (std::size_t i = 0; i + m <= chain_.size(); i += m)
      in_progress_.insert(key_of(chain_.data() + i, m));
  }

  void track_push(const std::int64_t* a, int m) {
    chain_pos_[key_of(a, m)].push_back(chain_.size());
    chain_.insert(chain_.end(), a, a + m);
    if (tracking_) in_progress_.insert(key_of(a, m));
  }

  void track_unwind(std::size_t frame_base, int m) {
    for (std::size_t i = frame_base; i + m <= chain_.size(); i += m) {
      TupleKey k = key_of(chain_.data() + i, m);
      if (tracking_) in_progress_.erase(k);
      auto it = chain_pos_.find(k);
      it->second.pop_back();
      if (it->second.empty()) chain_pos_.erase(it);
    }
    chain_.resize(frame_base);
  }

  // Looks a tuple up in the calling frame's own tail chain; positions for a
  // key are kept in push (hence ascending) order.
  bool in_own_segment(std::size_t frame_base, const std::int64_t* a, int m,
                      std::size_t* where) const {
    auto it = chain_pos_.find(key_of(a, m));
    if (it == chain_pos_.end()) return false;
    auto p = std::lower_bound(it->second.begin(), it->second.end(), frame_base);
    if (p == it->second.end()) return false;
    *where = *p;
    return true;
  }

  [[noreturn]] void raise_cycle(std::size_t from, const std::int64_t* repeat, int m) {
    CycleSignal c;
    for (std::size_t i = from; i + m <= chain_.size(); i += m)
      c.witness.emplace_back(chain_.data() + i, chain_.data() + i + m);
    c.witness.emplace_back(repeat, repeat + m);
    throw c;
  }

  // -- schema shape --------------------------------------------------------

  bool tuple_base(const std::int64_t* a) const { return a[0] <= a[1]; }

  std::int64_t tuple_base_value(const std::int64_t* a) const {
    switch (schema_.family) {
      case SchemaSpec::Family::Takeuchi3:
      case SchemaSpec::Family::TakeuchiM:
        return a[1];
      case SchemaSpec::Family::Gabriel:
        return a[2];
      case SchemaSpec::Family::KScheme:
        return a[0];
      case SchemaSpec::Family::BooleanB:
        return (a[0] == a[1] && a[1] == a[2]) ? 0 : 1;
      case SchemaSpec::Family::VH:
        return schema_.hspec.lookup(a[0], a[1], a[2]);
      default:
        throw std::logic_error("tuple_base_value: not a tuple schema");
    }
  }

  // Child i of (a_1 .. a_m) is (a_i - 1, a_{i+1}, .., a_m, a_1, .., a_{i-1}).
  void child_args(const std::int64_t* a, int m, int i, std::int64_t* out) const {
    out[0] = guard(a[i] - 1);
    for (int j = 1; j < m; ++j) out[j] = a[(i + j) % m];
  }

  // -- full expansion ------------------------------------------------------

  std::int64_t full_tuple(const std::int64_t* args) {
    int m = schema_.arity();
    std::size_t frame_base = chain_.size();
    ++depth_;
    maybe_start_tracking(m);
    std::int64_t cur[kMaxArity];
    std::copy(args, args + m, cur);
    while (true) {
      step();
      if (tuple_base(cur)) {
        track_unwind(frame_base, m);
        --depth_;
        return tuple_base_value(cur);
      }
      ++elses_;
      track_push(cur, m);
      std::int64_t next[kMaxArity];
      std::int64_t child[kMaxArity];
      for (int i = 0; i < m; ++i) {
        child_args(cur, m, i, child);
        if (tracking_ && in_progress_.count(key_of(child, m)))
          throw RegressSignal{};
        next[i] = full_tuple(child);
      }
      std::size_t where = 0;
      if (in_own_segment(frame_base, next, m, &where)) raise_cycle(where, next, m);
      if (tracking_ && in_progress_.count(key_of(next, m))) throw RegressSignal{};
      std::copy(next, next + m, cur);
    }
  }

  std::int64_t full_unary(std::int64_t x) {
    std::size_t frame_base = chain_.size();
    ++depth_;
    maybe_start_tracking(1);
    while (true) {
      step();
      if (x > g91_a_) {
        track_unwind(frame_base, 1);
        --depth_;
        return guard(x - g91_b_);
      }
      ++elses_;
      track_push(&x, 1);
      std::int64_t v = guard(x + g91_d_);
      for (std::int64_t k = 1; k < g91_c_; ++k) {
        if (tracking_ && in_progress_.count(key_of(&v, 1)))
          throw RegressSignal{};
        v = full_unary(v);
      }
      std::size_t where = 0;
      if (in_own_segment(frame_base, &v, 1, &where)) raise_cycle(where, &v, 1);
      if (tracking_ && in_progress_.count(key_of(&v, 1))) throw RegressSignal{};
      x = v;
    }
  }

  // -- memoized ------------------------------------------------------------

  // Frames record how each active call was reached so that an in-progress
  // hit can be classified: a pure chain of outermost (tail) expansions is a
  // provable cycle with a replayable witness, anything else is regress.
  struct MemoFrame {
    TupleKey key;
    bool via_tail;
  };

  std::int64_t memo_hit_or_run(const TupleKey& k, bool via_tail,
                               auto&& body) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    auto ip = memo_depth_.find(k);
    if (ip != memo_depth_.end()) {
      std::size_t first = ip->second;
      bool pure_tail = via_tail;
      for (std::size_t i = first + 1; i < memo_frames_.size() && pure_tail; ++i)
        pure_tail = memo_frames_[i].via_tail;
      if (!pure_tail) throw RegressSignal{};
      CycleSignal c;
      for (std::size_t i = first; i < memo_frames_.size(); ++i) {
        const TupleKey& fk = memo_frames_[i].key;
        c.witness.emplace_back(fk.v.begin(), fk.v.begin() + fk.m);
      }
      c.witness.emplace_back(k.v.begin(), k.v.begin() + k.m);
      throw c;
    }
    memo_depth_.emplace(k, memo_frames_.size());
    memo_frames_.push_back({k, via_tail});
    std::int64_t v = body();
    memo_frames_.pop_back();
    memo_depth_.erase(k);
    memo_.emplace(k, v);
    return v;
  }

  std::int64_t memo_tuple(const std::int64_t* args, bool via_tail) {
    int m = schema_.arity();
    TupleKey k = key_of(args, m);
    return memo_hit_or_run(k, via_tail, [&]() -> std::int64_t {
      step();
      if (tuple_base(args)) return tuple_base_value(args);
      ++elses_;
      std::int64_t next[kMaxArity];
      std::int64_t child[kMaxArity];
      for (int i = 0; i < m; ++i) {
        child_args(args, m, i, child);
        next[i] = memo_tuple(child, false);
      }
      return memo_tuple(next, true);
    });
  }

  std::int64_t memo_unary(std::int64_t x, bool via_tail) {
    TupleKey k = key_of(&x, 1);
    return memo_hit_or_run(k, via_tail, [&]() -> std::int64_t {
      step();
      if (x > g91_a_) return guard(x - g91_b_);
      ++elses_;
      std::int64_t v = guard(x + g91_d_);
      for (std::int64_t i = 1; i < g91_c_; ++i) v = memo_unary(v, false);
      return memo_unary(v, true);
    });
  }

  // -- call by need --------------------------------------------------------

  // Thunk graph for lazy evaluation. A Call node is the pending evaluation
  // of the schema at its argument thunks; argument thunks are shared between
  // sibling calls, so each is forced at most once.
  struct Thunk {
    enum class Kind { Lit, Dec, Call } kind;
    bool forced = false;
    bool forcing = false;
    std::int64_t value = 0;
    int dec_of = -1;
    std::array<int, kMaxArity> call_args{};
  };

  int new_lit(std::int64_t v) {
    Thunk t{Thunk::Kind::Lit};
    t.forced = true;
    t.value = v;
    thunks_.push_back(t);
    return static_cast<int>(thunks_.size()) - 1;
  }

  int new_dec(int of) {
    Thunk t{Thunk::Kind::Dec};
    t.dec_of = of;
    thunks_.push_back(t);
    return static_cast<int>(thunks_.size()) - 1;
  }

  int new_call(const std::array<int, kMaxArity>& args) {
    Thunk t{Thunk::Kind::Call};
    t.call_args = args;
    thunks_.push_back(t);
    return static_cast<int>(thunks_.size()) - 1;
  }

  std::int64_t force(int idx) {
    if (thunks_[idx].forced) return thunks_[idx].value;
    if (thunks_[idx].forcing) throw RegressSignal{};
    thunks_[idx].forcing = true;
    std::int64_t v = 0;
    switch (thunks_[idx].kind) {
      case Thunk::Kind::Lit:
        v = thunks_[idx].value;
        break;
      case Thunk::Kind::Dec:
        v = guard(force(thunks_[idx].dec_of) - 1);
        break;
      case Thunk::Kind::Call: {
        int m = schema_.arity();
        step();
        std::int64_t a0 = force(thunks_[idx].call_args[0]);
        std::int64_t a1 = force(thunks_[idx].call_args[1]);
        if (a0 <= a1) {
          v = a1;  // base value is the second argument for both tak schemas
          break;
        }
        ++elses_;
        std::array<int, kMaxArity> args = thunks_[idx].call_args;
        std::array<int, kMaxArity> children{};
        for (int i = 0; i < m; ++i) {
          std::array<int, kMaxArity> cargs{};
          cargs[0] = new_dec(args[i]);
          for (int j = 1; j < m; ++j) cargs[j] = args[(i + j) % m];
          children[i] = new_call(cargs);
        }
        v = force(new_call(children));
        break;
      }
    }
    thunks_[idx].forcing = false;
    thunks_[idx].forced = true;
    thunks_[idx].value = v;
    return v;
  }

  std::int64_t lazy_root(std::span<const std::int64_t> args) {
    int m = schema_.arity();
    std::array<int, kMaxArity> lits{};
    for (int i = 0; i < m; ++i) lits[i] = new_lit(args[i]);
    return force(new_call(lits));
  }

  // -- state ---------------------------------------------------------------

  const SchemaSpec& schema_;
  EvalOptions opt_;
  BigNat initial_fuel_;
  std::uint64_t fuel_left_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t elses_ = 0;
  int depth_ = 0;
  bool tracking_ = false;
  std::int64_t g91_a_ = 0, g91_b_ = 0, g91_c_ = 1, g91_d_ = 0;

  std::vector<std::int64_t> chain_;  // flat stack of in-progress loop tuples
  std::unordered_map<TupleKey, std::vector<std::size_t>, TupleKeyHash> chain_pos_;
  std::unordered_set<TupleKey, TupleKeyHash> in_progress_;

  std::unordered_map<TupleKey, std::int64_t, TupleKeyHash> memo_;
  std::unordered_map<TupleKey, std::size_t, TupleKeyHash> memo_depth_;
  std::vector<MemoFrame> memo_frames_;

  std::vector<Thunk> thunks_;
};

}  // namespace

int SchemaSpec::arity() const {
  switch (family) {
    case Family::McCarthy91Original:
    case Family::McCarthy91Modified:
    case Family::Generalized91:
      return 1;
    case Family::TakeuchiM:
      return m;
    default:
      return 3;
  }
}

std::string SchemaSpec::name() const {
  switch (family) {
    case Family::McCarthy91Original:
      return "m91";
    case Family::McCarthy91Modified:
      return "m91mod";
    case Family::Generalized91:
      return "gen91";
    case Family::Takeuchi3:
      return "tak3";
    case Family::Gabriel:
      return "gabriel";
    case Family::BooleanB:
      return "boolb";
    case Family::KScheme:
      return "k";
    case Family::VH:
      return std::string("vh:") + HSpec::default_name(hspec.def);
    case Family::TakeuchiM:
      return "takm:" + std::to_string(m);
  }
  return "?";
}

SchemaSpec SchemaSpec::mccarthy91_original() {
  return SchemaSpec{Family::McCarthy91Original};
}
SchemaSpec SchemaSpec::mccarthy91_modified() {
  return SchemaSpec{Family::McCarthy91Modified};
}
SchemaSpec SchemaSpec::generalized91(Gen91Params p) {
  p.validate();
  SchemaSpec s{Family::Generalized91};
  s.gen91 = std::move(p);
  return s;
}
SchemaSpec SchemaSpec::takeuchi3() { return SchemaSpec{Family::Takeuchi3}; }
SchemaSpec SchemaSpec::gabriel() { return SchemaSpec{Family::Gabriel}; }
SchemaSpec SchemaSpec::boolean_b() { return SchemaSpec{Family::BooleanB}; }
SchemaSpec SchemaSpec::k_scheme() { return SchemaSpec{Family::KScheme}; }
SchemaSpec SchemaSpec::vh(HSpec h) {
  SchemaSpec s{Family::VH};
  s.hspec = std::move(h);
  return s;
}
SchemaSpec SchemaSpec::takeuchi_m(int m) {
  if (m < 3 || m > kMaxArity)
    throw std::invalid_argument("TakeuchiM: arity must be in [3, 12]");
  SchemaSpec s{Family::TakeuchiM};
  s.m = m;
  return s;
}

SchemaSpec SchemaSpec::parse(const std::string& text) {
  if (text == "m91") return mccarthy91_original();
  if (text == "m91mod") return mccarthy91_modified();
  if (text == "tak3") return takeuchi3();
  if (text == "gabriel") return gabriel();
  if (text == "boolb") return boolean_b();
  if (text == "k") return k_scheme();
  if (text.rfind("takm:", 0) == 0)
    return takeuchi_m(std::stoi(text.substr(5)));
  if (text.rfind("vh:", 0) == 0) {
    HSpec h;
    h.def = HSpec::parse_default(text.substr(3));
    return vh(std::move(h));
  }
  if (text.rfind("vh@", 0) == 0) return vh(HSpec::load(text.substr(3)));
  if (text.rfind("gen91:", 0) == 0) {
    std::string rest = text.substr(6);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream in(rest);
    std::string a, b, c, d;
    if (!(in >> a >> b >> c >> d))
      throw std::invalid_argument("gen91 schema: expected gen91:a,b,c,d");
    Gen91Params p;
    p.a = Rational(a);
    p.b = Rational(b);
    p.c = std::stoll(c);
    p.d = Rational(d);
    return generalized91(std::move(p));
  }
  throw std::invalid_argument("unknown schema '" + text + "'");
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::FullExpansion:
      return "full";
    case Strategy::Memoized:
      return "memo";
    case Strategy::CallByNeed:
      return "lazy";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "full") return Strategy::FullExpansion;
  if (name == "memo") return Strategy::Memoized;
  if (name == "lazy") return Strategy::CallByNeed;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::vector<Strategy> applicable_strategies(const SchemaSpec& schema) {
  switch (schema.family) {
    case SchemaSpec::Family::Takeuchi3:
    case SchemaSpec::Family::TakeuchiM:
      return {Strategy::FullExpansion, Strategy::Memoized, Strategy::CallByNeed};
    default:
      // Call-by-need cannot skip any argument when the base value needs the
      // full tuple (Gabriel, boolean b, v_h) or the scheme is strict unary.
      return {Strategy::FullExpansion, Strategy::Memoized};
  }
}

EvalOutcome evaluate(const SchemaSpec& schema, std::span<const std::int64_t> args,
                     Strategy strategy, const BigNat& fuel,
                     const EvalOptions& options) {
  if (static_cast<int>(args.size()) != schema.arity())
    throw std::invalid_argument("evaluate: argument arity does not match schema");
  for (std::int64_t a : args)
    if (a > options.guard || a < -options.guard)
      throw OverflowError("evaluate: argument outside guard range");
  auto allowed = applicable_strategies(schema);
  if (std::find(allowed.begin(), allowed.end(), strategy) == allowed.end())
    throw std::invalid_argument("evaluate: strategy not applicable to this schema");
  Evaluator ev(schema, options, fuel);
  return ev.run(args, strategy);
}

std::vector<std::pair<Strategy, EvalOutcome>> compare_strategies(
    const SchemaSpec& schema, std::span<const std::int64_t> args,
    const BigNat& fuel, const EvalOptions& options) {
  std::vector<std::pair<Strategy, EvalOutcome>> out;
  for (Strategy s : applicable_strategies(schema))
    out.emplace_back(s, evaluate(schema, args, s, fuel, options));
  for (const auto& [s, o] : out)
    for (const auto& [s2, o2] : out)
      if (o.kind == EvalOutcome::Kind::Value && o2.kind == EvalOutcome::Kind::Value &&
          o.value != o2.value)
        throw std::logic_error("compare_strategies: value strategies disagree");
  return out;
}

}  // namespace recurselab
