// tropichinese: command-line front end.
//
// Exit codes: 0 success or identity holds, 1 counterexample (or an oracle
// mismatch), 2 usage or parse error, 3 resource cap exceeded.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <tropichinese/tropichinese.hpp>

namespace tc = tropichinese;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

constexpr std::size_t kMaxReprRank = 8;
constexpr std::uint64_t kDefaultSeed = 20241019;

std::uint64_t default_seed() {
  if (char const* env = std::getenv("TROPICHINESE_SEED")) {
    try {
      return std::stoull(env);
    } catch (std::exception const&) {
      throw tc::ParseError(std::string("TROPICHINESE_SEED is not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

void print_block_diag(tc::BlockDiagMatrix const& m) {
  for (std::size_t b = 0; b < m.block_count(); ++b)
    std::cout << "block " << b + 1 << ": " << m.block(b) << '\n';
}

struct CanonOptions {
  std::size_t rank = 0;
  std::string word;
  bool oracle = false;
  std::size_t cap = tc::kDefaultClassCap;
};

int run_canon(CanonOptions const& o, bool json) {
  auto const w = tc::Word::parse(o.word, o.rank);
  auto const k = tc::canonical_via_rep(w);
  auto const cw = tc::expand(k);
  std::optional<bool> agree;
  if (o.oracle) agree = (tc::canonical_oracle(w, o.cap) == k);

  if (json) {
    auto j = tc::to_json(k);
    j["word"] = cw.to_string();
    if (agree) j["oracle"] = *agree ? "agree" : "mismatch";
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "rank " << k.rank() << ": " << k.to_string() << '\n';
    std::cout << "canonical word: " << (cw.empty() ? "(empty)" : cw.to_string()) << '\n';
    if (agree) std::cout << "oracle: " << (*agree ? "agree" : "MISMATCH") << '\n';
  }
  return agree.value_or(true) ? kExitOk : kExitCounterexample;
}

struct ReprOptions {
  std::size_t rank = 0;
  bool minimize = false;
  bool affine = false;
};

int run_repr(ReprOptions const& o) {
  if (o.rank < 3) throw tc::DomainError("repr needs rank >= 3");
  if (o.rank > kMaxReprRank)
    throw tc::CapExceeded("repr is capped at rank " + std::to_string(kMaxReprRank));
  tc::Json out;
  if (o.minimize) {
    auto m = tc::minimized_rep(o.rank);
    out["representation"] = tc::to_json(m.rep);
    out["selection"] = tc::to_json(m.selection);
    out["matrix_size"] = m.rep.matrix_size();
    out["bound"] = o.rank * (o.rank + 1);
    if (o.affine) out["affine"] = tc::to_json(m.full_map.restrict_blocks(m.selection.selected));
  } else {
    auto rep = tc::build_rep(o.rank);
    out["representation"] = tc::to_json(rep);
    out["matrix_size"] = rep.matrix_size();
    if (o.affine) out["affine"] = tc::to_json(tc::affine_of_rep(o.rank));
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

struct EvalOptions {
  std::size_t rank = 0;
  std::string word;
};

int run_eval(EvalOptions const& o, bool json) {
  auto w = tc::Word::parse(o.word, o.rank);
  std::size_t const rn = std::max<std::size_t>(o.rank, 3);
  if (rn > kMaxReprRank)
    throw tc::CapExceeded("eval is capped at rank " + std::to_string(kMaxReprRank));
  auto const img = tc::eval_word(tc::build_rep(rn), w.embed(rn));
  if (json) {
    auto j = tc::to_json(img);
    j["rank"] = rn;
    std::cout << j.dump(2) << '\n';
  } else {
    if (rn != o.rank) std::cout << "(evaluated in rank " << rn << ")\n";
    print_block_diag(img);
  }
  return kExitOk;
}

struct CheckOptions {
  std::string identity;
  bool adjan = false;
  std::optional<std::size_t> chn;
  std::optional<std::size_t> trop;
  std::size_t samples = 200;
  std::size_t maxlen = 8;
  std::optional<std::uint64_t> seed;
  std::int64_t lo = -3;
  std::int64_t hi = 3;
};

int run_check(CheckOptions const& o, bool json) {
  if (o.adjan == !o.identity.empty())
    throw tc::ParseError("give exactly one of an identity or --adjan");
  if (o.chn.has_value() == o.trop.has_value())
    throw tc::ParseError("give exactly one of --chn or --trop");
  auto const id = o.adjan ? tc::adjan() : tc::Identity::parse(o.identity);
  std::uint64_t const seed = o.seed ? *o.seed : default_seed();

  tc::Json j{{"identity", id.to_string()}, {"seed", seed}};
  bool failed = false;
  if (o.chn) {
    auto v = tc::check_in_chn(id, *o.chn, o.samples, o.maxlen, seed);
    failed = !v.holds;
    j["monoid"] = "Ch_" + std::to_string(*o.chn);
    j["samples"] = v.samples;
    j["verdict"] = v.holds ? "holds" : "counterexample";
    if (v.counterexample) {
      auto const& c = *v.counterexample;
      tc::Json sub = tc::Json::object();
      for (std::size_t a = 0; a < c.substitution.size(); ++a)
        sub[std::string(1, tc::kIdentityLetters[a])] = c.substitution[a].to_string();
      tc::Json blocks = tc::Json::object();
      for (std::size_t a = 0; a < c.letter_blocks.size(); ++a)
        blocks[std::string(1, tc::kIdentityLetters[a])] = tc::to_json(c.letter_blocks[a]);
      j["counterexample"] = {{"substitution", sub},
                             {"lhs", tc::to_json(c.lhs_form)},
                             {"rhs", tc::to_json(c.rhs_form)},
                             {"u2_transfer",
                              {{"block", c.block},
                               {"substitution", blocks},
                               {"lhs", tc::to_json(c.lhs_block)},
                               {"rhs", tc::to_json(c.rhs_block)}}}};
    }
  } else {
    auto v = tc::check_in_tropical(id, *o.trop, o.samples, {o.lo, o.hi}, seed);
    failed = v.refuted;
    j["monoid"] = "U_" + std::to_string(*o.trop) + "(T)";
    j["samples"] = v.samples;
    j["verdict"] = v.refuted ? "counterexample" : "no-counterexample";
    if (v.counterexample) {
      tc::Json sub = tc::Json::object();
      for (std::size_t a = 0; a < v.counterexample->substitution.size(); ++a)
        sub[std::string(1, tc::kIdentityLetters[a])] = tc::to_json(v.counterexample->substitution[a]);
      j["counterexample"] = {{"substitution", sub},
                             {"lhs", tc::to_json(v.counterexample->lhs)},
                             {"rhs", tc::to_json(v.counterexample->rhs)}};
    }
  }

  if (json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << j["verdict"].get<std::string>() << " in " << j["monoid"].get<std::string>()
              << " for " << id.to_string() << " (" << j["samples"] << " samples, seed " << seed
              << ")\n";
    if (j.contains("counterexample")) std::cout << j["counterexample"].dump(2) << '\n';
  }
  return failed ? kExitCounterexample : kExitOk;
}

struct GrowthOptions {
  std::size_t rank = 0;
  std::size_t maxlen = 0;
  bool oracle = false;
  std::size_t cap = tc::kDefaultClassCap;
};

int run_growth(GrowthOptions const& o, bool json) {
  if (o.rank == 0) throw tc::DomainError("rank must be at least 1");
  bool mismatch = false;
  tc::Json rows = tc::Json::array();
  if (!json) std::cout << "m\tcount" << (o.oracle ? "\toracle" : "") << '\n';
  for (std::size_t m = 0; m <= o.maxlen; ++m) {
    auto const c = tc::growth_count(o.rank, m);
    tc::Json row{{"m", m}, {"count", c.str()}};
    std::string line = std::to_string(m) + "\t" + c.str();
    if (o.oracle) {
      auto const b = tc::growth_oracle(o.rank, m, o.cap);
      row["oracle"] = b.str();
      line += "\t" + b.str();
      if (b != c) {
        mismatch = true;
        row["mismatch"] = true;
        line += "\tMISMATCH";
      }
    }
    rows.push_back(std::move(row));
    if (!json) std::cout << line << '\n';
  }
  if (json) std::cout << tc::Json{{"rank", o.rank}, {"rows", rows}}.dump(2) << '\n';
  return mismatch ? kExitCounterexample : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faithful tropical representation of the Chinese monoid"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  CanonOptions canon;
  auto* c = app.add_subcommand("canon", "Canonical form of a word via the representation");
  c->add_option("-n,--rank", canon.rank, "Rank n of Ch_n")->required()->check(CLI::PositiveNumber);
  c->add_option("word", canon.word, "Word, e.g. \"a3 a1 a2\" or \"312\"");
  c->add_flag("--oracle", canon.oracle, "Cross-check against the rewriting oracle");
  c->add_option("--cap", canon.cap, "Oracle class-size cap")->check(CLI::PositiveNumber);
  c->add_flag("--json", json);

  ReprOptions repr;
  auto* r = app.add_subcommand("repr", "Export the representation as JSON");
  r->add_option("-n,--rank", repr.rank, "Rank n >= 3")->required();
  r->add_flag("--minimize", repr.minimize, "Restrict to a rank-certified block selection");
  r->add_flag("--affine", repr.affine, "Also export the affine exponent map");
  r->add_flag("--json", json);

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "Image of a word under the representation");
  e->add_option("-n,--rank", eval.rank, "Rank n of Ch_n")->required()->check(CLI::PositiveNumber);
  e->add_option("word", eval.word, "Word (may be empty)");
  e->add_flag("--json", json);

  CheckOptions check;
  auto* k = app.add_subcommand("check", "Test a semigroup identity u = v (letters x y z w)");
  k->add_option("identity", check.identity, "Identity, e.g. \"x y = y x\"");
  k->add_flag("--adjan", check.adjan, "Use the Adjan identity");
  k->add_option("--chn", check.chn, "Substitute random words of Ch_n")->check(CLI::PositiveNumber);
  k->add_option("--trop", check.trop, "Substitute random matrices of U_dim(T)")
      ->check(CLI::PositiveNumber);
  k->add_option("--samples", check.samples, "Number of random substitutions");
  k->add_option("--maxlen", check.maxlen, "Maximum word length per letter (Ch_n)")
      ->check(CLI::PositiveNumber);
  k->add_option("--seed", check.seed, "Seed (default: $TROPICHINESE_SEED or built-in)");
  k->add_option("--lo", check.lo, "Smallest finite matrix entry (U_dim)");
  k->add_option("--hi", check.hi, "Largest finite matrix entry (U_dim)");
  k->add_flag("--json", json);

  GrowthOptions growth;
  auto* g = app.add_subcommand("growth", "Number of elements of each length");
  g->add_option("-n,--rank", growth.rank, "Rank n of Ch_n")->required()->check(CLI::PositiveNumber);
  g->add_option("-m,--maxlen", growth.maxlen, "Largest length")->required();
  g->add_flag("--oracle", growth.oracle, "Also count classes by brute force");
  g->add_option("--cap", growth.cap, "Oracle enumeration cap")->check(CLI::PositiveNumber);
  g->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& ex) {
    return app.exit(ex);
  } catch (CLI::ParseError const& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    if (*c) return run_canon(canon, json);
    if (*r) return run_repr(repr);
    if (*e) return run_eval(eval, json);
    if (*k) return run_check(check, json);
    if (*g) return run_growth(growth, json);
  } catch (tc::CapExceeded const& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitCap;
  } catch (tc::ParseError const& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (tc::DomainError const& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (tc::Error const& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return 70;
  }
  return kExitUsage;
}
