#include "orthokit/checker.hpp"

#include <algorithm>
#include <thread>

#include "orthokit/laws.hpp"

namespace orthokit {

// ── evaluation ───────────────────────────────────────────────────────────
//
// Terms are evaluated through their expansion: the derived connectives are
// computed by the same primitive join/meet/ortho combinations that expand()
// writes out, so eval(v, t) == eval(v, expand(t)) holds by construction and
// is cross-checked by a property test.

namespace {

int eval_rec(const FiniteOrthoLattice& l, const std::map<std::string, int>& v,
             const Term& t) {
  switch (t.kind) {
    case TermKind::Var: {
      auto it = v.find(t.name);
      if (it == v.end())
        throw std::invalid_argument("valuation does not bind variable '" + t.name + "'");
      if (it->second < 0 || it->second >= l.size())
        throw std::invalid_argument("valuation binds '" + t.name + "' outside the lattice");
      return it->second;
    }
    case TermKind::Zero: return l.bottom();
    case TermKind::One: return l.top();
    case TermKind::Comp: return l.ortho(eval_rec(l, v, *t.left));
    case TermKind::Join: return l.join(eval_rec(l, v, *t.left), eval_rec(l, v, *t.right));
    case TermKind::Meet: return l.meet(eval_rec(l, v, *t.left), eval_rec(l, v, *t.right));
    default: break;
  }
  // Derived connective: one expansion step, then recurse.
  TermPtr self = std::make_shared<Term>(t);
  return eval_rec(l, v, *expand(self));
}

}  // namespace

int eval(const FiniteOrthoLattice& l, const std::map<std::string, int>& valuation,
         const Term& t) {
  return eval_rec(l, valuation, t);
}

int eval(const Valuation& v, const Term& t) {
  if (!v.lattice) throw std::invalid_argument("valuation has no lattice");
  return eval_rec(*v.lattice, v.values, t);
}

// ── compiled scan ────────────────────────────────────────────────────────
//
// The exhaustive loops run on a flat postfix program over variable slots.

namespace {

enum class Op : std::uint8_t { PushVar, PushBottom, PushTop, Comp, Join, Meet };

struct Compiled {
  std::vector<Op> ops;
  std::vector<int> slots;  // parallel to PushVar ops
};

void compile_rec(const Term& t, const std::vector<std::string>& vars, Compiled& out) {
  switch (t.kind) {
    case TermKind::Var: {
      auto it = std::find(vars.begin(), vars.end(), t.name);
      out.ops.push_back(Op::PushVar);
      out.slots.push_back(static_cast<int>(it - vars.begin()));
      return;
    }
    case TermKind::Zero: out.ops.push_back(Op::PushBottom); return;
    case TermKind::One: out.ops.push_back(Op::PushTop); return;
    case TermKind::Comp:
      compile_rec(*t.left, vars, out);
      out.ops.push_back(Op::Comp);
      return;
    case TermKind::Join:
    case TermKind::Meet:
      compile_rec(*t.left, vars, out);
      compile_rec(*t.right, vars, out);
      out.ops.push_back(t.kind == TermKind::Join ? Op::Join : Op::Meet);
      return;
    default:
      throw std::logic_error("compile expects an expanded term");
  }
}

Compiled compile(const TermPtr& t, const std::vector<std::string>& vars) {
  Compiled c;
  compile_rec(*expand(t), vars, c);
  return c;
}

struct Machine {
  const FiniteOrthoLattice* l;
  std::vector<int> stack;

  int run(const Compiled& c, const std::vector<int>& assign) {
    stack.clear();
    std::size_t slot = 0;
    for (Op op : c.ops) {
      switch (op) {
        case Op::PushVar:
          stack.push_back(assign[static_cast<std::size_t>(c.slots[slot++])]);
          break;
        case Op::PushBottom: stack.push_back(l->bottom()); break;
        case Op::PushTop: stack.push_back(l->top()); break;
        case Op::Comp: stack.back() = l->ortho(stack.back()); break;
        case Op::Join: {
          int r = stack.back();
          stack.pop_back();
          stack.back() = l->join(stack.back(), r);
          break;
        }
        case Op::Meet: {
          int r = stack.back();
          stack.pop_back();
          stack.back() = l->meet(stack.back(), r);
          break;
        }
      }
    }
    return stack.back();
  }
};

void decode(std::uint64_t index, int n, std::vector<int>& assign) {
  // First variable most significant: the scan behaves like nested loops in
  // variable order.
  for (std::size_t k = assign.size(); k-- > 0;) {
    assign[k] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
}

struct Violation {
  std::uint64_t index;
  int lhs, rhs;
};

// Least-index valuation violating the quasi-equation, or nullopt.
std::optional<Violation> scan(const FiniteOrthoLattice& l,
                              const std::vector<Compiled>& hyp_lhs,
                              const std::vector<Compiled>& hyp_rhs,
                              const Compiled& con_lhs, const Compiled& con_rhs,
                              std::size_t nvars, std::uint64_t total, int jobs) {
  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<Violation> {
    Machine m{&l, {}};
    std::vector<int> assign(nvars, 0);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      decode(idx, l.size(), assign);
      bool hyps_hold = true;
      for (std::size_t h = 0; h < hyp_lhs.size(); ++h) {
        if (m.run(hyp_lhs[h], assign) != m.run(hyp_rhs[h], assign)) {
          hyps_hold = false;
          break;
        }
      }
      if (!hyps_hold) continue;
      int lv = m.run(con_lhs, assign);
      int rv = m.run(con_rhs, assign);
      if (lv != rv) return Violation{idx, lv, rv};
    }
    return std::nullopt;
  };

  if (jobs <= 1 || total < 4096) return scan_range(0, total);

  const int workers = std::min<int>(jobs, 64);
  std::vector<std::optional<Violation>> found(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) /
                              static_cast<std::uint64_t>(workers);
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
    std::uint64_t hi = std::min(total, lo + chunk);
    threads.emplace_back([&, w, lo, hi] { found[static_cast<std::size_t>(w)] = scan_range(lo, hi); });
  }
  for (auto& th : threads) th.join();
  // countermodel with the least enumeration index wins
  std::optional<Violation> best;
  for (const auto& f : found)
    if (f && (!best || f->index < best->index)) best = f;
  return best;
}

CheckReport run_check(const FiniteOrthoLattice& l, const QuasiEquation& q,
                      const CheckOptions& options) {
  std::set<std::string> var_set = variables(q);
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  const std::size_t nvars = vars.size();

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < nvars; ++k) {
    if (total > options.budget / static_cast<std::uint64_t>(l.size()) + 1)
      throw BudgetError(total * static_cast<std::uint64_t>(l.size()), options.budget);
    total *= static_cast<std::uint64_t>(l.size());
  }
  if (total > options.budget) throw BudgetError(total, options.budget);

  std::vector<Compiled> hyp_lhs, hyp_rhs;
  for (const auto& h : q.hypotheses) {
    hyp_lhs.push_back(compile(h.lhs, vars));
    hyp_rhs.push_back(compile(h.rhs, vars));
  }
  Compiled con_lhs = compile(q.conclusion.lhs, vars);
  Compiled con_rhs = compile(q.conclusion.rhs, vars);

  std::optional<Violation> v =
      scan(l, hyp_lhs, hyp_rhs, con_lhs, con_rhs, nvars, total, options.jobs);

  CheckReport report;
  if (!v) {
    report.holds = true;
    report.examined = total;
    return report;
  }
  report.holds = false;
  report.examined = v->index + 1;
  Countermodel cm;
  cm.lattice = l.name();
  std::vector<int> assign(nvars, 0);
  decode(v->index, l.size(), assign);
  for (std::size_t k = 0; k < nvars; ++k)
    cm.valuation.emplace_back(vars[k], l.label(assign[k]));
  cm.lhs_value = l.label(v->lhs);
  cm.rhs_value = l.label(v->rhs);
  report.countermodel = std::move(cm);
  return report;
}

}  // namespace

CheckReport check_equation(const FiniteOrthoLattice& l, const Equation& e,
                           const CheckOptions& options) {
  QuasiEquation q;
  q.conclusion = e;
  return run_check(l, q, options);
}

CheckReport check_quasi(const FiniteOrthoLattice& l, const QuasiEquation& q,
                        const CheckOptions& options) {
  return run_check(l, q, options);
}

CheckReport congruence_sem_check(const TermPtr& a, const TermPtr& b,
                                 const std::vector<TermPtr>& premises,
                                 const FiniteOrthoLattice& l, const CheckOptions& options) {
  QuasiEquation q;
  for (const TermPtr& p : premises) q.hypotheses.push_back(Equation{p, Term::one(), true});
  q.conclusion = Equation{a, b, false};
  return run_check(l, q, options);
}

ClassFlags classify(const FiniteOrthoLattice& l, const CheckOptions& options) {
  ClassFlags f;
  f.ol = true;  // construction validates L1-L6
  f.l8 = check_equation(l, laws::l(8), options);
  f.om = check_equation(l, laws::om_law(), options);
  f.l9 = check_equation(l, laws::l(9), options);
  f.woml = f.l8.holds;
  f.oml = f.om.holds;
  f.dl = f.l9.holds;
  bool l10_all = true;
  for (int i = 0; i <= 5; ++i) {
    f.l10[static_cast<std::size_t>(i)] = check_equation(l, laws::l10(i), options);
    l10_all = l10_all && f.l10[static_cast<std::size_t>(i)].holds;
  }
  f.wdl = f.woml && l10_all;
  return f;
}

std::string machine_line(const CheckReport& report, const FiniteOrthoLattice& l) {
  std::string out = "VERDICT ";
  out += report.holds ? "holds" : "fails";
  out += " LATTICE " + l.name();
  if (report.countermodel) {
    out += " WITNESS";
    for (const auto& [var, elem] : report.countermodel->valuation)
      out += " " + var + "=" + elem;
  }
  return out;
}

}  // namespace orthokit
