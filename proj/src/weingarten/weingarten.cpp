#include "weingarten/weingarten.hpp"

#include <fstream>
#include <sstream>

#include "symfun/characters.hpp"
#include "symfun/jack.hpp"
#include "symfun/spherical.hpp"

namespace haarmom {

namespace {

// Π_{(i,j)∈λ} (2d + (j-1) - 2(i-1)): the Sp(2d) specialization.
RationalFunctionD symplectic_specialization(const Partition& lambda) {
    Poly num = Poly::constant(1);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) num = num * Poly::linear(2, j - 2 * i);
    return {num, Poly::constant(1)};
}

RationalFunctionD dim_value(const RationalFunctionD& f, const DimMode& dm) {
    if (dm.is_symbolic) return f;
    return {f.eval(mpq_class(dm.d))};
}

std::map<Partition, RationalFunctionD> build_values(Group g, int n, const DimMode& dm) {
    const auto types = partitions_of(n);
    const auto lambdas = partitions_of(n, dm.is_symbolic ? -1 : dm.d);
    std::map<Partition, RationalFunctionD> table;
    for (const auto& t : types) table.emplace(t, RationalFunctionD());

    if (g == Group::Unitary) {
        // W(μ) = Σ_λ χ_λ(μ) / (H(λ) · Π_{(i,j)}(d + (j-1) - (i-1)))
        auto chars = CharacterTable::get(n);
        for (const auto& lambda : lambdas) {
            const RationalFunctionD denom =
                dim_value(principal_specialization(lambda, 1), dm) *
                RationalFunctionD(mpq_class(hook_product(lambda)));
            for (const auto& mu : types) {
                const mpz_class chi = chars->value(lambda, mu);
                if (chi == 0) continue;
                table.at(mu) += RationalFunctionD(mpq_class(chi)) / denom;
            }
        }
        return table;
    }

    // O and Sp share the shape (2^n n!/(2n)!) Σ_λ dim · sph(λ,ρ) / spec(λ).
    const bool sympl = (g == Group::Symplectic);
    const mpq_class prefactor =
        mpq_class(factorial(n) * (mpz_class(1) << n)) / mpq_class(factorial(2 * n));
    auto sph = SphericalTable::get(n, sympl ? mpq_class(1, 2) : mpq_class(2));
    for (const auto& lambda : lambdas) {
        const mpz_class dim =
            character_dimension(sympl ? lambda.union_self() : lambda.doubled());
        const RationalFunctionD spec = dim_value(
            sympl ? symplectic_specialization(lambda) : principal_specialization(lambda, 2), dm);
        const RationalFunctionD weight = RationalFunctionD(prefactor * mpq_class(dim)) / spec;
        for (const auto& rho : types) {
            const mpq_class w = sph->value(lambda, rho);
            if (w == 0) continue;
            table.at(rho) += weight * RationalFunctionD(w);
        }
    }
    return table;
}

}  // namespace

WeingartenTable::WeingartenTable(Group g, int n, DimMode dm,
                                 std::map<Partition, RationalFunctionD> values)
    : group_(g), n_(n), dim_(dm), values_(std::move(values)) {}

const RationalFunctionD& WeingartenTable::value(const Partition& type) const {
    auto it = values_.find(type);
    if (it == values_.end()) throw std::invalid_argument("weingarten table: unknown type");
    return it->second;
}

RationalFunctionD weingarten_unitary(const Partition& mu, const DimMode& dm) {
    return weingarten_value(Group::Unitary, mu, dm);
}

RationalFunctionD weingarten_orthogonal(const Partition& rho, const DimMode& dm) {
    return weingarten_value(Group::Orthogonal, rho, dm);
}

RationalFunctionD weingarten_symplectic(const Partition& rho, const DimMode& dm) {
    return weingarten_value(Group::Symplectic, rho, dm);
}

RationalFunctionD weingarten_value(Group g, const Partition& type, const DimMode& dm) {
    return default_weingarten_store().get(g, type.weight(), dm)->value(type);
}

namespace {

std::string coeff_list(const Poly& p) {
    std::string s;
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
        if (k) s += ' ';
        s += p.coeff(k).get_str();
    }
    return s;
}

Poly parse_coeffs(const std::string& s) {
    std::istringstream is(s);
    std::vector<mpz_class> cs;
    std::string tok;
    while (is >> tok) cs.emplace_back(tok);
    return Poly(std::move(cs));
}

Partition parse_partition_str(const std::string& s) {
    std::vector<int> parts;
    std::string num;
    for (char c : s) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            if (!num.empty()) parts.push_back(std::stoi(num));
            num.clear();
        } else {
            num += c;
        }
    }
    if (!num.empty()) parts.push_back(std::stoi(num));
    return Partition(std::move(parts));
}

}  // namespace

void WeingartenTable::write(std::ostream& os) const {
    os << "haarmom-weingarten 1\n";
    os << "group " << group_name(group_) << "\n";
    os << "n " << n_ << "\n";
    os << "dim " << dim_.to_string() << "\n";
    for (const auto& [type, value] : values_)
        os << type.to_string() << " : " << coeff_list(value.num()) << " / "
           << coeff_list(value.den()) << "\n";
}

WeingartenTable WeingartenTable::read(std::istream& is) {
    std::string line, word;
    if (!std::getline(is, line) || line.rfind("haarmom-weingarten 1", 0) != 0)
        throw std::runtime_error("weingarten table: bad header");
    std::string gname;
    int n = 0;
    std::string dim;
    if (!(is >> word >> gname) || word != "group")
        throw std::runtime_error("weingarten table: bad group line");
    if (!(is >> word >> n) || word != "n")
        throw std::runtime_error("weingarten table: bad n line");
    if (!(is >> word >> dim) || word != "dim")
        throw std::runtime_error("weingarten table: bad dim line");
    std::getline(is, line);
    const Group g = group_from_name(gname);
    const DimMode dm = dim == "d" ? DimMode::symbolic() : DimMode::numeric(std::stoi(dim));
    std::map<Partition, RationalFunctionD> values;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(" : ");
        const auto slash = line.find(" / ");
        if (colon == std::string::npos || slash == std::string::npos)
            throw std::runtime_error("weingarten table: bad value line");
        const Partition type = parse_partition_str(line.substr(0, colon));
        Poly num = parse_coeffs(line.substr(colon + 3, slash - colon - 3));
        Poly den = parse_coeffs(line.substr(slash + 3));
        values.emplace(type, RationalFunctionD(std::move(num), std::move(den)));
    }
    return {g, n, dm, std::move(values)};
}

WeingartenStore::WeingartenStore(std::filesystem::path cache_dir)
    : cache_dir_(std::move(cache_dir)) {}

std::shared_ptr<const WeingartenTable> WeingartenStore::get(Group g, int n, const DimMode& dm) {
    if (n < 1) throw std::invalid_argument("weingarten table degree must be >= 1");
    const std::string key =
        std::string(1, group_tag(g)) + "_" + std::to_string(n) + "_" + dm.to_string();
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;

    if (!cache_dir_.empty()) {
        const auto path = cache_dir_ / ("wg_" + key + ".txt");
        std::ifstream in(path);
        if (in) {
            auto loaded = std::make_shared<WeingartenTable>(WeingartenTable::read(in));
            if (loaded->group() == g && loaded->degree() == n && loaded->dim_mode() == dm) {
                tables_.emplace(key, loaded);
                return loaded;
            }
        }
    }

    auto table = std::make_shared<const WeingartenTable>(g, n, dm, build_values(g, n, dm));
    ++builds_;
    tables_.emplace(key, table);
    if (!cache_dir_.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_dir_, ec);
        std::ofstream out(cache_dir_ / ("wg_" + key + ".txt"));
        if (out) table->write(out);
    }
    return table;
}

long WeingartenStore::build_count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return builds_;
}

WeingartenStore& default_weingarten_store() {
    static WeingartenStore store;
    return store;
}

}  // namespace haarmom
