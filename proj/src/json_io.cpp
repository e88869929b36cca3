#include "affs/json_io.hpp"

#include <gmpxx.h>

#include "affs/errors.hpp"

namespace affs {

namespace {

json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad integer string " + j.dump());
        return z;
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

}  // namespace

json matrix_to_json(const LaurentMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) {
            json cell = json::array();
            for (const auto& [exp, coeff] : m(r, c).terms())
                cell.push_back({exp, integer_to_json(coeff.value().get_num()), integer_to_json(coeff.value().get_den())});
            entries.push_back(std::move(cell));
        }
    return {{"n", m.size()}, {"entries", std::move(entries)}};
}

LaurentMatrix matrix_from_json(const json& j) {
    try {
        const long n = j.at("n").get<long>();
        if (n <= 0) throw InvalidInput("matrix size must be positive");
        const json& entries = j.at("entries");
        if (!entries.is_array() || static_cast<long>(entries.size()) != n * n)
            throw InvalidInput("entries must hold n*n cells");
        LaurentMatrix m(static_cast<std::size_t>(n));
        for (long k = 0; k < n * n; ++k) {
            LaurentPoly p;
            for (const json& term : entries[static_cast<std::size_t>(k)]) {
                if (!term.is_array() || term.size() != 3) throw InvalidInput("term must be [exp, num, den]");
                const mpz_class den = integer_from_json(term[2]);
                if (den == 0) throw InvalidInput("zero denominator");
                mpq_class q(integer_from_json(term[1]), den);
                q.canonicalize();
                p += LaurentPoly::monomial(FieldScalar(q), term[0].get<int>());
            }
            m(static_cast<std::size_t>(k / n), static_cast<std::size_t>(k % n)) = std::move(p);
        }
        return m;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed matrix JSON: ") + e.what());
    }
}

json window_to_json(const AffinePermutation& w) { return {{"n", w.period()}, {"window", w.window()}}; }

AffinePermutation window_from_json(const json& j) {
    try {
        auto window = j.at("window").get<std::vector<long>>();
        if (j.contains("n") && j.at("n").get<long>() != static_cast<long>(window.size()))
            throw InvalidInput("n does not match the window length");
        return AffinePermutation(std::move(window));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed window JSON: ") + e.what());
    }
}

json root_to_json(const RootIdx& r) { return {{"i", r.i}, {"j", r.j}}; }

RootIdx root_from_json(const json& j) {
    try {
        return RootIdx{j.at("i").get<long>(), j.at("j").get<long>()};
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed root JSON: ") + e.what());
    }
}

json partition_to_json(const Partition& p) { return p.parts(); }

json composition_to_json(const Composition& c) { return c.parts(); }

}  // namespace affs
