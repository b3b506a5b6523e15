#include "dtn/model_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace dtn {

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(diagnostics.empty() ? ErrorCode::SyntaxError : diagnostics.front().code,
            [&] {
              std::string msg;
              for (const auto& d : diagnostics) {
                if (!msg.empty()) msg += '\n';
                msg += std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " +
                       d.message;
              }
              return msg;
            }()),
      diagnostics_(std::move(diagnostics)) {}

namespace {

enum class Tok { Ident, Number, Arrow, Rel, Minus, And, Comma, Colon, Bad };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t start, std::size_t len) {
    out.push_back({k, std::string(line.substr(start, len)), {lineno, start + 1}});
    i = start + len;
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::string_view rest = line.substr(i);
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      push(Tok::Ident, i, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      push(Tok::Number, i, j - i);
    } else if (rest.starts_with("->")) {
      push(Tok::Arrow, i, 2);
    } else if (rest.starts_with("<=") || rest.starts_with(">=") || rest.starts_with("==") ||
               rest.starts_with("!=")) {
      push(Tok::Rel, i, 2);
    } else if (c == '<' || c == '>' || c == '=') {
      push(Tok::Rel, i, 1);
    } else if (rest.starts_with("&&")) {
      push(Tok::And, i, 2);
    } else if (c == '-') {
      push(Tok::Minus, i, 1);
    } else if (c == ',') {
      push(Tok::Comma, i, 1);
    } else if (c == ':') {
      push(Tok::Colon, i, 1);
    } else {
      push(Tok::Bad, i, 1);
    }
  }
  return out;
}

struct NameRef {
  std::string name;
  SourceSpan span;
};

struct RawAtom {
  NameRef clock;
  std::optional<NameRef> other;
  Relation relation;
  std::int64_t constant;
};

using RawConj = std::vector<RawAtom>;

struct RawLocation {
  NameRef name;
  bool initial = false;
  RawConj invariant;
};

struct RawEdge {
  NameRef source, target;
  RawConj guard;
  std::vector<NameRef> resets;
  std::optional<NameRef> locguard;
};

struct Failure {
  Diagnostic diag;
};

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::size_t lineno, std::size_t line_len)
      : toks_(std::move(toks)), end_span_{lineno, line_len + 1} {}

  bool done() const { return pos_ >= toks_.size(); }
  const Token* peek() const { return done() ? nullptr : &toks_[pos_]; }

  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const {
    throw Failure{{code, done() ? end_span_ : toks_[pos_].span, msg}};
  }

  const Token& expect(Tok kind, const char* what) {
    if (done() || toks_[pos_].kind != kind)
      fail(ErrorCode::SyntaxError, std::string("expected ") + what + found());
    return toks_[pos_++];
  }

  bool accept(Tok kind, std::string_view text = {}) {
    if (done() || toks_[pos_].kind != kind) return false;
    if (!text.empty() && toks_[pos_].text != text) return false;
    ++pos_;
    return true;
  }

  bool at_keyword(std::string_view kw) const {
    return !done() && toks_[pos_].kind == Tok::Ident && toks_[pos_].text == kw;
  }

  NameRef name(const char* what) {
    const Token& t = expect(Tok::Ident, what);
    return {t.text, t.span};
  }

  std::vector<NameRef> name_list(const char* what) {
    std::vector<NameRef> out{name(what)};
    while (accept(Tok::Comma)) out.push_back(name(what));
    return out;
  }

  RawConj conjunction() {
    RawConj out{atom()};
    while (accept(Tok::And)) out.push_back(atom());
    return out;
  }

  void finish() {
    if (!done()) fail(ErrorCode::SyntaxError, "unexpected '" + toks_[pos_].text + "'");
  }

 private:
  std::string found() const {
    return done() ? std::string(", found end of line") : ", found '" + toks_[pos_].text + "'";
  }

  RawAtom atom() {
    RawAtom a{name("clock name"), std::nullopt, Relation::LessEq, 0};
    if (accept(Tok::Minus)) a.other = name("clock name");
    if (done() || toks_[pos_].kind != Tok::Rel) fail(ErrorCode::SyntaxError, "expected relation" + found());
    const std::string& rel = toks_[pos_].text;
    if (rel == "<") a.relation = Relation::Less;
    else if (rel == "<=") a.relation = Relation::LessEq;
    else if (rel == "==" || rel == "=") a.relation = Relation::Equal;
    else if (rel == ">=") a.relation = Relation::GreaterEq;
    else if (rel == ">") a.relation = Relation::Greater;
    else fail(ErrorCode::UnsupportedRelation, "relation '" + rel + "' is not supported");
    ++pos_;
    const Token& num = expect(Tok::Number, "non-negative integer constant");
    auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), a.constant);
    if (ec != std::errc{})
      throw Failure{{ErrorCode::SyntaxError, num.span, "constant '" + num.text + "' out of range"}};
    return a;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceSpan end_span_;
};

class ModelParser {
 public:
  Gta run(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t nl = text.find('\n', start);
      std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++lineno;
      try {
        parse_line(line, lineno);
      } catch (const Failure& f) {
        diags_.push_back(f.diag);
      }
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
    Gta model = resolve(lineno);
    if (!diags_.empty()) throw ParseError(std::move(diags_));
    validate(model);
    return model;
  }

 private:
  void parse_line(std::string_view line, std::size_t lineno) {
    LineParser p(tokenize(line, lineno), lineno, line.size());
    if (p.done()) return;
    if (p.peek()->kind == Tok::Bad) p.fail(ErrorCode::SyntaxError, "unexpected character '" + p.peek()->text + "'");
    const NameRef kw = p.name("declaration keyword");
    if (kw.name == "gta") {
      if (name_) throw Failure{{ErrorCode::SyntaxError, kw.span, "duplicate 'gta' declaration"}};
      name_ = p.name("model name");
    } else if (kw.name == "clocks") {
      for (auto& c : p.name_list("clock name")) clocks_.push_back(std::move(c));
    } else if (kw.name == "location") {
      RawLocation loc{p.name("location name"), false, {}};
      if (p.accept(Tok::Ident, "initial")) loc.initial = true;
      if (p.accept(Tok::Ident, "invariant")) {
        p.expect(Tok::Colon, "':'");
        loc.invariant = p.conjunction();
      }
      locations_.push_back(std::move(loc));
    } else if (kw.name == "edge") {
      RawEdge e;
      e.source = p.name("source location");
      p.expect(Tok::Arrow, "'->'");
      e.target = p.name("target location");
      bool seen_guard = false, seen_reset = false, seen_locguard = false;
      while (!p.done()) {
        auto clause = [&](const char* kw_text, bool& seen) {
          if (!p.at_keyword(kw_text)) return false;
          if (seen) p.fail(ErrorCode::SyntaxError, std::string("duplicate '") + kw_text + "' clause");
          seen = true;
          p.accept(Tok::Ident);
          p.expect(Tok::Colon, "':'");
          return true;
        };
        if (clause("guard", seen_guard)) e.guard = p.conjunction();
        else if (clause("reset", seen_reset)) e.resets = p.name_list("clock name");
        else if (clause("locguard", seen_locguard)) e.locguard = p.name("location name");
        else p.fail(ErrorCode::SyntaxError, "expected 'guard:', 'reset:' or 'locguard:'");
      }
      edges_.push_back(std::move(e));
    } else {
      throw Failure{{ErrorCode::SyntaxError, kw.span, "unknown declaration '" + kw.name + "'"}};
    }
    p.finish();
  }

  void report(ErrorCode code, SourceSpan span, std::string msg) {
    diags_.push_back({code, span, std::move(msg)});
  }

  std::optional<ClockId> clock(const Gta& m, const NameRef& ref) {
    if (auto c = m.find_clock(ref.name)) return c;
    report(ErrorCode::UnknownClock, ref.span, "unknown clock '" + ref.name + "'");
    return std::nullopt;
  }

  std::optional<LocationId> location(const Gta& m, const NameRef& ref) {
    if (auto q = m.find_location(ref.name)) return q;
    report(ErrorCode::UnknownLocation, ref.span, "unknown location '" + ref.name + "'");
    return std::nullopt;
  }

  ClockConstraint constraint(const Gta& m, const RawConj& raw) {
    ClockConstraint cc;
    for (const auto& a : raw) {
      auto c = clock(m, a.clock);
      std::optional<ClockId> o;
      if (a.other) {
        o = clock(m, *a.other);
        if (!o) continue;
      }
      if (c) cc.atoms.push_back({*c, o, a.relation, a.constant});
    }
    return cc;
  }

  Gta resolve(std::size_t last_line) {
    Gta m;
    if (name_) m.name = name_->name;
    for (std::size_t i = 0; i < clocks_.size(); ++i) {
      const auto& c = clocks_[i];
      if (c.name == kGlobalClock && i != 0)
        report(ErrorCode::SyntaxError, c.span, "clock 't' is reserved and may only be declared first");
      else if (m.find_clock(c.name))
        report(ErrorCode::SyntaxError, c.span, "duplicate clock '" + c.name + "'");
      else
        m.clocks.push_back(c.name);
    }
    std::optional<SourceSpan> initial_span;
    for (const auto& loc : locations_) {
      if (m.find_location(loc.name.name)) {
        report(ErrorCode::SyntaxError, loc.name.span, "duplicate location '" + loc.name.name + "'");
        continue;
      }
      if (loc.initial) {
        if (initial_span)
          report(ErrorCode::SyntaxError, loc.name.span, "second initial location '" + loc.name.name + "'");
        else {
          initial_span = loc.name.span;
          m.initial = LocationId{m.locations.size()};
        }
      }
      m.locations.push_back(loc.name.name);
      m.invariants.push_back(constraint(m, loc.invariant));
    }
    if (!initial_span) report(ErrorCode::SyntaxError, {last_line, 1}, "no initial location declared");

    for (const auto& e : edges_) {
      Transition tr;
      auto src = location(m, e.source);
      auto dst = location(m, e.target);
      tr.guard = constraint(m, e.guard);
      for (const auto& r : e.resets)
        if (auto c = clock(m, r)) tr.resets.push_back(*c);
      if (e.locguard) {
        if (auto g = location(m, *e.locguard)) tr.locguard = g;
      }
      if (!src || !dst) continue;
      tr.source = *src;
      tr.target = *dst;
      m.transitions.push_back(std::move(tr));
    }
    return m;
  }

  std::optional<NameRef> name_;
  std::vector<NameRef> clocks_;
  std::vector<RawLocation> locations_;
  std::vector<RawEdge> edges_;
  std::vector<Diagnostic> diags_;
};

std::string atom_text(const Gta& model, const AtomicConstraint& a) {
  std::string s = model.clocks.at(a.clock.index);
  if (a.other) s += " - " + model.clocks.at(a.other->index);
  s += ' ';
  s += to_string(a.relation);
  s += ' ';
  s += std::to_string(a.constant);
  return s;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Gta parse_gta(std::string_view text) { return ModelParser{}.run(text); }

std::string format_constraint(const Gta& model, const ClockConstraint& cc) {
  if (cc.is_true()) return "true";
  std::string s;
  for (const auto& a : cc.atoms) {
    if (!s.empty()) s += " && ";
    s += atom_text(model, a);
  }
  return s;
}

std::string write_gta(const Gta& model) {
  std::ostringstream out;
  if (!model.name.empty()) out << "gta " << model.name << '\n';
  if (!model.clocks.empty()) {
    out << "clocks ";
    for (std::size_t i = 0; i < model.clocks.size(); ++i) out << (i ? ", " : "") << model.clocks[i];
    out << '\n';
  }
  for (std::size_t i = 0; i < model.location_count(); ++i) {
    out << "location " << model.locations[i];
    if (model.initial.index == i) out << " initial";
    if (!model.invariants[i].is_true()) out << " invariant: " << format_constraint(model, model.invariants[i]);
    out << '\n';
  }
  for (const auto& tr : model.transitions) {
    out << "edge " << model.location_name(tr.source) << " -> " << model.location_name(tr.target);
    if (!tr.guard.is_true()) out << " guard: " << format_constraint(model, tr.guard);
    if (!tr.resets.empty()) {
      out << " reset: ";
      for (std::size_t i = 0; i < tr.resets.size(); ++i)
        out << (i ? ", " : "") << model.clocks.at(tr.resets[i].index);
    }
    if (tr.locguard) out << " locguard: " << model.location_name(*tr.locguard);
    out << '\n';
  }
  return out.str();
}

std::string export_dot(const Gta& model) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(model.name) << "\" {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < model.location_count(); ++i) {
    std::string label = model.locations[i];
    if (!model.invariants[i].is_true()) label += "\n" + format_constraint(model, model.invariants[i]);
    out << "  n" << i << " [label=\"" << dot_escape(label) << "\", shape="
        << (model.initial.index == i ? "doublecircle" : "circle") << "];\n";
  }
  for (const auto& tr : model.transitions) {
    std::vector<std::string> parts;
    if (!tr.guard.is_true()) parts.push_back(format_constraint(model, tr.guard));
    for (auto c : tr.resets) parts.push_back(model.clocks.at(c.index) + " := 0");
    if (tr.locguard) parts.push_back("[" + model.location_name(*tr.locguard) + "]");
    std::string label;
    for (const auto& p : parts) label += (label.empty() ? "" : "\n") + p;
    out << "  n" << tr.source.index << " -> n" << tr.target.index;
    if (!label.empty()) out << " [label=\"" << dot_escape(label) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dtn
