#include "psilab/chartab.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace psilab {

int CharacterTable::index_of(const ClassFunction& chi) const {
  for (int i = 0; i < irr_count(); ++i)
    if (irr[i].values == chi.values) return i;
  return -1;
}

void CharacterTable::verify() const {
  const auto& cls = group->classes();
  const int k = cls.count();
  if (irr_count() != k) throw VerificationError("table: character count != class count");
  if (!(irr[0] == ClassFunction::trivial(group)))
    throw VerificationError("table: first character is not trivial");

  mpz_class degsum = 0;
  for (int i = 0; i < k; ++i) {
    if (!irr[i].values[0].is_integer()) throw VerificationError("table: non-integer degree");
    mpz_class d = degree(i);
    degsum += d * d;
  }
  if (degsum != mpz_class(static_cast<unsigned long>(group->order())))
    throw VerificationError("table: degree squares do not sum to |G|");

  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Cyclotomic ip = inner_product(irr[i], irr[j]);
      if (!(ip == Cyclotomic(i == j ? 1 : 0)))
        throw VerificationError("table: row orthogonality failed");
    }
  // column orthogonality: sum_chi chi(g_i) conj(chi(g_j)) = delta_ij |C(g_i)|
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      CycAccumulator acc;
      for (int i = 0; i < k; ++i) acc.add_product(irr[i].values[a], irr[i].values[b].conjugate(), 1);
      Cyclotomic want =
          a == b ? Cyclotomic(mpz_class(static_cast<unsigned long>(cls.centralizer_orders[a])))
                 : Cyclotomic(0);
      if (!(acc.result() == want)) throw VerificationError("table: column orthogonality failed");
    }
}

std::string CharacterTable::serialize() const {
  const auto& cls = group->classes();
  std::ostringstream out;
  out << "psilab-table v1\n";
  out << "group " << (group->spec_text().empty() ? "custom" : group->spec_text()) << "\n";
  out << "degree " << group->degree() << "\n";
  out << "generators";
  for (const Perm& g : group->generators()) out << " " << g.to_cycles();
  out << "\n";
  out << "order " << group->order() << "\n";
  out << "exponent " << exponent << "\n";
  out << "classes " << cls.count() << "\n";
  for (int j = 0; j < cls.count(); ++j)
    out << "class " << j << " order " << cls.element_orders[j] << " size " << cls.sizes[j]
        << " rep " << cls.representatives[j].to_cycles() << "\n";
  for (int i = 0; i < irr_count(); ++i) {
    out << "char " << i << " :";
    for (const Cyclotomic& v : irr[i].values) out << " " << v.to_string();
    out << "\n";
  }
  return out.str();
}

u64 CharacterTable::content_hash() const { return fnv1a(serialize()); }

TableRef parse_character_table(GroupRef g, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto table = std::make_shared<CharacterTable>();
  table->group = g;
  table->exponent = g->exponent();
  const auto& cls = g->classes();

  if (!std::getline(in, line) || line != "psilab-table v1")
    throw Error("table parse: bad header");
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "group" || tag == "degree" || tag == "generators" || tag == "classes") continue;
    if (tag == "order") {
      u64 o;
      ls >> o;
      if (o != g->order()) throw Error("table parse: order mismatch");
    } else if (tag == "exponent") {
      u64 e;
      ls >> e;
      if (e != g->exponent()) throw Error("table parse: exponent mismatch");
    } else if (tag == "class") {
      int j;
      u64 o, s;
      std::string kw1, kw2, kw3, rep;
      ls >> j >> kw1 >> o >> kw2 >> s >> kw3 >> rep;
      if (j < 0 || j >= cls.count() || o != cls.element_orders[j] || s != cls.sizes[j] ||
          rep != cls.representatives[j].to_cycles())
        throw Error("table parse: class data mismatch");
    } else if (tag == "char") {
      int i;
      std::string colon;
      ls >> i >> colon;
      std::vector<Cyclotomic> values;
      std::string tok;
      while (ls >> tok) values.push_back(Cyclotomic::parse(tok));
      if (static_cast<int>(values.size()) != cls.count())
        throw Error("table parse: wrong value count");
      table->irr.emplace_back(g, std::move(values));
    } else if (!tag.empty()) {
      throw Error("table parse: unknown tag " + tag);
    }
  }
  table->verify();
  return table;
}

std::string table_cache_dir() {
  const char* env = std::getenv("PSI_CACHE_DIR");
  return env && *env ? std::string(env) : std::string(".psi-cache");
}

TableRef character_table(GroupRef g) {
  namespace fs = std::filesystem;
  fs::path dir = table_cache_dir();
  fs::path file = dir / (hex64(g->generator_hash()) + ".tab");

  std::error_code ec;
  if (fs::exists(file, ec)) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return parse_character_table(g, ss.str());
    } catch (const std::exception&) {
      // stale or corrupt cache entry; recompute below
    }
  }

  TableRef t = compute_character_table(g);

  fs::create_directories(dir, ec);
  if (!ec) {
    fs::path tmp = file;
    tmp += ".tmp." + std::to_string(static_cast<unsigned long>(::getpid()));
    {
      std::ofstream out(tmp);
      out << t->serialize();
    }
    fs::rename(tmp, file, ec);  // atomic publish; concurrent writers race benignly
    if (ec) fs::remove(tmp, ec);
  }
  return t;
}

}  // namespace psilab
