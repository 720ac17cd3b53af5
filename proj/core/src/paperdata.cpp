#include "rwgraph/paperdata.hpp"

namespace rwgraph {

namespace {

Partition lam(const char* text) { return Partition::parse(text); }

PWPolynomial C(const char* text) { return PWPolynomial::closed(lam(text)); }
PWPolynomial K(const char* text) { return PWPolynomial::connected(lam(text)); }
PWPolynomial R(long n) { return PWPolynomial(Rational(n)); }

}  // namespace

ChernTable published_chern_table() {
  ChernTable t;
  struct Row {
    Series s;
    unsigned k;
    const char* lambda;
    long value;
  };
  const Row rows[] = {
      {Series::hilb, 1, "2", -48},        {Series::kummer, 1, "2", -48},
      {Series::hilb, 2, "2+2", 3312},     {Series::kummer, 2, "2+2", 3024},
      {Series::hilb, 2, "4", 360},        {Series::kummer, 2, "4", 1080},
      {Series::hilb, 3, "2+2+2", -294400}, {Series::kummer, 3, "2+2+2", -241664},
      {Series::hilb, 3, "4+2", -29440},   {Series::kummer, 3, "4+2", -66560},
      {Series::hilb, 3, "6", -4480},      {Series::kummer, 3, "6", -22400},
  };
  for (auto& r : rows) t.insert(r.s, r.k, lam(r.lambda), Rational(r.value));
  return t;
}

std::vector<PublishedBetaRow> published_beta_table() {
  // note: the first row prints a = 12 although the row's own beta values
  // force a = -12
  return {
      {lam("2"), Rational(-24), Rational(-48), Rational(12), Rational(-36)},
      {lam("2,2"), Rational(-288), Rational(-288), Rational(-96), Rational(-96)},
      {lam("4"), Rational(360), Rational(360), Rational(120), Rational(120)},
      {lam("2,2,2"), Rational(-5120), Rational(-4096), Rational(-1280), Rational(-256)},
      {lam("4,2"), Rational(6400), Rational(5120), Rational(1600), Rational(320)},
      {lam("6"), Rational(-5600), Rational(-4480), Rational(-1400), Rational(-280)},
  };
}

std::vector<PublishedExpansion> published_expansions_closed() {
  std::vector<PublishedExpansion> v;
  v.push_back({lam("2"), C("2")});
  v.push_back({lam("2,2"), C("2,2") - C("2").pow(2)});
  v.push_back({lam("4"), C("4")});
  v.push_back({lam("2,2,2"), C("2,2,2") - R(3) * C("2") * C("2,2") + R(2) * C("2").pow(3)});
  v.push_back({lam("4,2"), C("4,2") - C("2") * C("4")});
  v.push_back({lam("6"), C("6")});
  // the "+ 12 <w~2>^2" term is printed without its <w~2^2> factor
  v.push_back({lam("2,2,2,2"), C("2,2,2,2") - R(4) * C("2") * C("2,2,2") - R(3) * C("2,2").pow(2) +
                                   R(12) * C("2").pow(2) - R(6) * C("2").pow(4)});
  v.push_back({lam("4,2,2"), C("4,2,2") - R(2) * C("2") * C("4,2") - C("2,2") * C("4") +
                                 R(2) * C("2").pow(2) * C("4")});
  v.push_back({lam("6,2"), C("6,2") - C("2") * C("6")});
  v.push_back({lam("4,4"), C("4,4") - C("4").pow(2)});
  v.push_back({lam("8"), C("8")});
  return v;
}

std::vector<PublishedExpansion> published_expansions_mixed() {
  std::vector<PublishedExpansion> v;
  v.push_back({lam("2"), C("2")});
  // printed with <w~4> where <w~2^2> is meant
  v.push_back({lam("2,2"), C("4") - K("2").pow(2)});
  v.push_back({lam("4"), C("4")});
  v.push_back({lam("2,2,2"), C("2,2,2") - R(3) * K("2") * K("2,2") - K("2").pow(3)});
  v.push_back({lam("4,2"), C("4,2") - K("2") * K("4")});
  v.push_back({lam("6"), C("6")});
  return v;
}

PaperDiff diff_against_paper(const ChernTable& table) {
  PaperDiff diff;
  auto note = [&](bool ok, const std::string& what, const std::string& detail) {
    if (ok) {
      diff.lines.push_back("ok        " + what);
    } else {
      diff.lines.push_back("MISMATCH  " + what + ": " + detail);
      diff.flagged.push_back(what);
    }
  };

  auto records = compute_beta_table(3, table);
  for (auto& row : published_beta_table()) {
    const BetaRecord& rec = find_record(records, row.lambda);
    std::string base = "table row k[" + row.lambda.str() + "]";
    note(rec.beta_kummer == row.beta_kummer, base + " beta_kummer",
         "computed " + rec.beta_kummer.str() + ", printed " + row.beta_kummer.str());
    note(rec.beta_hilb == row.beta_hilb, base + " beta_hilb",
         "computed " + rec.beta_hilb.str() + ", printed " + row.beta_hilb.str());
    note(rec.a == row.a, base + " a", "computed " + rec.a.str() + ", printed " + row.a.str());
    note(rec.c == row.c, base + " c", "computed " + rec.c.str() + ", printed " + row.c.str());
  }

  for (auto& ex : published_expansions_closed()) {
    PWPolynomial computed = connected_to_closed(ex.lambda);
    note(computed == ex.rhs, "closed expansion of k[" + ex.lambda.str() + "]",
         "computed " + computed.str() + ", printed " + ex.rhs.str());
  }

  for (auto& ex : published_expansions_mixed()) {
    PWPolynomial computed = connected_mixed_form(ex.lambda);
    note(computed == ex.rhs, "mixed expansion of k[" + ex.lambda.str() + "]",
         "computed " + computed.str() + ", printed " + ex.rhs.str());
  }

  return diff;
}

}  // namespace rwgraph
