#include "cyspec/kodaira.hpp"

#include <algorithm>

#include "cyspec/errors.hpp"

namespace cyspec {

namespace {

[[noreturn]] void unknown(const FiberType& f, Monodromy m) {
  throw UnknownFiberError("no fiber table row for " + to_string(f) + " with " + to_string(m) +
                          " monodromy");
}

RepSum reps(const char* text) { return parse_rep_sum(text); }

ChargedColumns cols(Rational adj, std::optional<Rational> rho0, std::optional<Rational> q1,
                    std::optional<Rational> q2) {
  return {adj, rho0, q1, q2};
}

const std::optional<Rational> blank;

}  // namespace

std::string to_string(const FiberType& f) {
  switch (f.symbol) {
    case FiberSymbol::I: return "I" + std::to_string(f.n);
    case FiberSymbol::II: return "II";
    case FiberSymbol::III: return "III";
    case FiberSymbol::IV: return "IV";
    case FiberSymbol::Istar: return "I" + std::to_string(f.n) + "*";
    case FiberSymbol::IVstar: return "IV*";
    case FiberSymbol::IIIstar: return "III*";
    case FiberSymbol::IIstar: return "II*";
  }
  return "?";
}

FiberType parse_fiber(const std::string& text) {
  if (text == "II") return {FiberSymbol::II, 0};
  if (text == "III") return {FiberSymbol::III, 0};
  if (text == "IV") return {FiberSymbol::IV, 0};
  if (text == "IV*") return {FiberSymbol::IVstar, 0};
  if (text == "III*") return {FiberSymbol::IIIstar, 0};
  if (text == "II*") return {FiberSymbol::IIstar, 0};
  const bool star = !text.empty() && text.back() == '*';
  const auto digits = text.substr(1, text.size() - 1 - (star ? 1 : 0));
  const bool numeric = !digits.empty() && digits.size() < 5 &&
                       std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (text.size() >= 2 && text[0] == 'I' && numeric) {
    const int n = std::stoi(digits);
    if (star) return {FiberSymbol::Istar, n};
    if (n >= 1) return {FiberSymbol::I, n};
  }
  throw UnknownFiberError("unknown fiber type '" + text + "'");
}

std::string to_string(Monodromy m) {
  switch (m) {
    case Monodromy::split: return "split";
    case Monodromy::semi_split: return "semi-split";
    case Monodromy::non_split: return "non-split";
  }
  return "?";
}

Monodromy parse_monodromy(const std::string& text) {
  if (text == "split") return Monodromy::split;
  if (text == "semi-split") return Monodromy::semi_split;
  if (text == "non-split") return Monodromy::non_split;
  throw UnknownFiberError("unknown monodromy '" + text + "'");
}

FiberRecord fiber_record(const FiberType& f, Monodromy m) {
  FiberRecord r;
  r.fiber = f;
  r.monodromy = m;
  const bool split = m == Monodromy::split;
  const bool non_split = m == Monodromy::non_split;
  const int n = f.n;
  switch (f.symbol) {
    case FiberSymbol::I:
      if (n < 1) unknown(f, m);
      if (split && n == 1) {
        r.algebra = LieAlgebraId::trivial();
        r.table_charged = cols(0, Rational(0), Rational(0), Rational(0));
        r.mP2 = 1;
      } else if (split && n == 2) {
        r.algebra = LieAlgebraId::su(2);
        r.rhoQ2 = reps("fund");
        r.table_charged = cols(2, Rational(0), Rational(0), Rational(2));
      } else if (split && n == 3) {
        r.algebra = LieAlgebraId::su(3);
        r.rhoQ2 = reps("fund");
        r.table_charged = cols(6, Rational(0), Rational(0), Rational(3));
      } else if (split) {
        r.algebra = LieAlgebraId::su(n);
        r.rhoQ1 = reps("lambda2");
        r.rhoQ2 = reps("fund");
        r.table_charged = cols(n * n - n, Rational(0), Rational(n * n - n, 2), Rational(n));
      } else if (non_split && n >= 4 && n % 2 == 0) {
        const int k = n / 2;
        r.algebra = LieAlgebraId::sp(k);
        r.rho0 = reps("lambda2_traceless");
        r.rhoQ2 = reps("fund");
        r.table_charged = cols(2 * k * k, Rational(2 * k * k - 2 * k), Rational(0), Rational(2 * k));
      } else if (non_split && n >= 3 && n % 2 == 1) {
        const int k = (n - 1) / 2;
        r.algebra = LieAlgebraId::sp(k);
        r.rho0 = reps("lambda2+2*fund");
        r.rhoQ1 = reps("half:fund");
        r.rhoQ2 = reps("fund");
        r.table_charged = cols(2 * k * k, Rational(2 * k * k + 2 * k), Rational(k), Rational(2 * k));
        r.mP1 = 1;
      } else {
        unknown(f, m);
      }
      return r;
    case FiberSymbol::II:
      // Cusp over the generic point: no gauge algebra, no matter.
      if (!split) unknown(f, m);
      r.algebra = LieAlgebraId::trivial();
      r.table_charged = cols(0, blank, blank, blank);
      return r;
    case FiberSymbol::III:
      if (!split) unknown(f, m);
      r.algebra = LieAlgebraId::su(2);
      r.rhoQ1 = reps("2*fund");
      r.table_charged = cols(2, Rational(0), Rational(4), blank);
      return r;
    case FiberSymbol::IV:
      if (split) {
        r.algebra = LieAlgebraId::su(3);
        r.rhoQ1 = reps("3*fund");
        r.table_charged = cols(6, Rational(0), Rational(9), blank);
      } else if (non_split) {
        r.algebra = LieAlgebraId::sp(1);
        r.rho0 = reps("lambda2+2*fund");
        r.rhoQ1 = reps("half:fund");
        r.table_charged = cols(2, Rational(4), Rational(1), blank);
      } else {
        unknown(f, m);
      }
      return r;
    case FiberSymbol::Istar:
      if (n < 0) unknown(f, m);
      if (n == 0) {
        if (non_split) {
          r.algebra = LieAlgebraId::g2();
          r.rho0 = reps("dim7_g2");
          r.table_charged = cols(12, Rational(6), Rational(0), blank);
        } else if (m == Monodromy::semi_split) {
          r.algebra = LieAlgebraId::so(7);
          r.rho0 = reps("vect");
          r.rhoQ2 = reps("spin");
          r.table_charged = cols(18, Rational(6), Rational(0), Rational(8));
        } else {
          r.algebra = LieAlgebraId::so(8);
          r.rhoQ1 = reps("vect");
          r.rhoQ2 = reps("spin_plus_minus");
          r.table_charged = cols(24, Rational(0), Rational(8), Rational(8));
        }
        return r;
      }
      if (m == Monodromy::semi_split) unknown(f, m);
      if (n == 1 && non_split) {
        r.algebra = LieAlgebraId::so(9);
        r.rho0 = reps("vect");
        r.rhoQ2 = reps("spin");
        r.table_charged = cols(32, Rational(8), Rational(0), Rational(16));
      } else if (n == 1) {
        r.algebra = LieAlgebraId::so(10);
        r.rhoQ1 = reps("vect");
        r.rhoQ2 = reps("spin_plus_minus");
        r.table_charged = cols(40, Rational(0), Rational(10), Rational(16));
      } else if (n == 2 && non_split) {
        r.algebra = LieAlgebraId::so(11);
        r.rho0 = reps("vect");
        r.rhoQ2 = reps("half:spin");
        r.table_charged = cols(50, Rational(10), Rational(0), Rational(16));
      } else if (n == 2) {
        r.algebra = LieAlgebraId::so(12);
        r.rhoQ1 = reps("vect");
        r.rhoQ2 = reps("half:spin_plus_minus");
        r.table_charged = cols(60, Rational(0), Rational(12), Rational(16));
      } else if (non_split) {
        r.algebra = LieAlgebraId::so(2 * n + 7);
        r.rho0 = reps("vect");
        r.table_charged = cols(2 * (n + 3) * (n + 3), Rational(2 * n + 6), Rational(0), blank);
      } else {
        r.algebra = LieAlgebraId::so(2 * n + 8);
        r.rhoQ1 = reps("vect");
        r.table_charged = cols(2 * (n + 3) * (n + 4), Rational(0), Rational(2 * n + 8), blank);
      }
      return r;
    case FiberSymbol::IVstar:
      if (non_split) {
        r.algebra = LieAlgebraId::f4();
        r.rho0 = reps("dim26_f4");
        r.table_charged = cols(48, Rational(24), Rational(0), blank);
      } else if (split) {
        r.algebra = LieAlgebraId::e6();
        r.rhoQ1 = reps("dim27_e6");
        r.table_charged = cols(72, Rational(0), Rational(27), blank);
      } else {
        unknown(f, m);
      }
      return r;
    case FiberSymbol::IIIstar:
      if (!split) unknown(f, m);
      r.algebra = LieAlgebraId::e7();
      r.rhoQ1 = reps("half:dim56_e7");
      r.table_charged = cols(126, Rational(0), Rational(28), blank);
      return r;
    case FiberSymbol::IIstar:
      if (!split) unknown(f, m);
      r.algebra = LieAlgebraId::e8();
      r.table_charged = cols(240, Rational(0), blank, blank);
      return r;
  }
  unknown(f, m);
}

MilnorContributions milnor_contributions(const FiberType& f, Monodromy m) {
  const auto r = fiber_record(f, m);
  return {r.mP1, r.mP2};
}

std::vector<std::string> validate_record_against_engine(const FiberRecord& rec) {
  std::vector<std::string> out;
  const auto check = [&](const char* column, const std::optional<RepSum>& rep,
                         const std::optional<Rational>& recorded, bool adjoint) {
    Rational engine = 0;
    if (adjoint) {
      engine = charged_dim(rec.algebra, RepLabel{RepKind::adjoint});
    } else if (rep) {
      engine = charged_dim(rec.algebra, *rep);
    }
    const auto where = to_string(rec.fiber) + "/" + to_string(rec.algebra) + " " + column;
    if (recorded) {
      if (*recorded != engine)
        out.push_back(where + ": recorded " + to_string(*recorded) + ", engine " + to_string(engine));
    } else if (rep) {
      out.push_back(where + ": representation " + to_string(*rep) + " has no recorded charged dimension");
    }
  };
  check("adjoint", std::nullopt, rec.table_charged.adjoint, true);
  check("rho0", rec.rho0, rec.table_charged.rho0, false);
  check("rhoQ1", rec.rhoQ1, rec.table_charged.rhoQ1, false);
  check("rhoQ2", rec.rhoQ2, rec.table_charged.rhoQ2, false);
  if (rec.rho0.has_value() == simply_laced(rec.algebra) && rec.algebra.family != Family::trivial) {
    out.push_back(to_string(rec.fiber) + "/" + to_string(rec.algebra) +
                  ": rho0 must be present exactly for non-simply-laced algebras");
  }
  return out;
}

std::vector<FiberRecord> enumerate_records(int max_param) {
  std::vector<FiberRecord> out;
  const auto add_all = [&](FiberType f) {
    for (auto m : {Monodromy::split, Monodromy::semi_split, Monodromy::non_split}) {
      try {
        out.push_back(fiber_record(f, m));
      } catch (const UnknownFiberError&) {
      }
    }
  };
  for (int n = 1; n <= max_param; ++n) add_all({FiberSymbol::I, n});
  add_all({FiberSymbol::II, 0});
  add_all({FiberSymbol::III, 0});
  add_all({FiberSymbol::IV, 0});
  for (int n = 0; n <= max_param; ++n) add_all({FiberSymbol::Istar, n});
  add_all({FiberSymbol::IVstar, 0});
  add_all({FiberSymbol::IIIstar, 0});
  add_all({FiberSymbol::IIstar, 0});
  return out;
}

}  // namespace cyspec
