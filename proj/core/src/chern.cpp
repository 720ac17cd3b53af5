#include "rwgraph/chern.hpp"

#include <fstream>
#include <sstream>

namespace rwgraph {

std::string series_name(Series s) { return s == Series::hilb ? "hilb" : "kummer"; }

void ChernTable::insert(Series s, unsigned k, const Partition& lambda, const Rational& value) {
  if (lambda.weight() != k)
    throw ChernParseError("chern entry " + series_name(s) + "," + std::to_string(k) + "," +
                          lambda.str('+') + ": ||lambda|| != k");
  auto key = std::make_tuple(static_cast<int>(s), k, lambda);
  if (!entries_.emplace(key, value).second)
    throw ChernParseError("duplicate chern entry " + series_name(s) + "," + std::to_string(k) +
                          "," + lambda.str('+'));
}

bool ChernTable::has(Series s, unsigned k, const Partition& lambda) const {
  return entries_.count(std::make_tuple(static_cast<int>(s), k, lambda)) > 0;
}

Rational ChernTable::get(Series s, unsigned k, const Partition& lambda) const {
  auto it = entries_.find(std::make_tuple(static_cast<int>(s), k, lambda));
  if (it == entries_.end())
    throw MissingChernEntry("missing chern entry (" + series_name(s) + ", " + std::to_string(k) +
                            ", " + lambda.str('+') + ")");
  return it->second;
}

ChernTable load_chern_table(std::istream& in) {
  ChernTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto is_blank = [](const std::string& s) {
      for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
      return true;
    };
    if (is_blank(line)) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    auto fail = [&](const std::string& msg) {
      throw ChernParseError("chern table line " + std::to_string(lineno) + ": " + msg);
    };
    if (fields.size() != 4) fail("expected series,k,partition,value");
    auto strip = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    for (auto& x : fields) x = strip(x);
    Series series;
    if (fields[0] == "hilb") series = Series::hilb;
    else if (fields[0] == "kummer") series = Series::kummer;
    else fail("unknown series '" + fields[0] + "'");
    unsigned k = 0;
    try {
      k = static_cast<unsigned>(std::stoul(fields[1]));
    } catch (...) {
      fail("bad k '" + fields[1] + "'");
    }
    Partition lambda;
    try {
      lambda = Partition::parse(fields[2]);
    } catch (const std::exception& e) {
      fail(e.what());
    }
    Rational value;
    try {
      value = Rational::parse(fields[3]);
    } catch (const std::exception& e) {
      fail(e.what());
    }
    try {
      table.insert(series, k, lambda, value);
    } catch (const ChernParseError& e) {
      fail(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
    }
  }
  return table;
}

ChernTable load_chern_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ChernParseError("cannot open chern table " + path);
  return load_chern_table(in);
}

}  // namespace rwgraph
