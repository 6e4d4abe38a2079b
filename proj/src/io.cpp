#include "entcone/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entcone {

namespace {

Rational rational_from_json(const json& value)
{
    if (value.is_number_integer())
        return Rational(std::to_string(value.get<long long>()));
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or a \"p/q\" string");
}

int ground_size_from_json(const json& record)
{
    if (!record.contains("n") || !record["n"].is_number_integer())
        throw std::invalid_argument("record lacks an integer \"n\"");
    const int n = record["n"].get<int>();
    check_ground_size(n);
    return n;
}

SubsetMask coordinate_from_key(const std::string& key, int n)
{
    const SubsetMask set = parse_subset_key(key);
    if (set.max_variable() > n)
        throw std::invalid_argument("coordinate \"" + key + "\" references a variable beyond n = " +
                                    std::to_string(n));
    return set;
}

std::vector<json> split_records(std::string_view text)
{
    std::vector<json> out;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        json array = json::parse(text);
        for (auto& r : array)
            out.push_back(std::move(r));
        return out;
    }
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        out.push_back(json::parse(line));
    }
    return out;
}

}  // namespace

json form_to_json(const LinForm& f)
{
    json record;
    record["n"] = f.n();
    record["rel"] = f.relation() == Relation::ge ? "ge" : "eq";
    json coeffs = json::object();
    auto c = f.coeffs();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) != 0)
            coeffs[subset_key(SubsetMask(i))] = to_string(c[i]);
    }
    record["coeffs"] = std::move(coeffs);
    return record;
}

LinForm form_from_json(const json& record)
{
    const int n = ground_size_from_json(record);
    Relation rel = Relation::ge;
    if (record.contains("rel")) {
        const auto r = record["rel"].get<std::string>();
        if (r == "eq")
            rel = Relation::eq;
        else if (r != "ge")
            throw std::invalid_argument("unknown relation \"" + r + "\"");
    }
    LinForm f(n, rel);
    if (!record.contains("coeffs") || !record["coeffs"].is_object())
        throw std::invalid_argument("record lacks a \"coeffs\" object");
    for (const auto& [key, value] : record["coeffs"].items()) {
        const Rational c = rational_from_json(value);
        if (key.empty() || key == "{}") {
            if (sgn(c) != 0)
                throw std::invalid_argument("coordinate of the empty set must have coefficient 0");
            continue;
        }
        f.add(coordinate_from_key(key, n), c);
    }
    return f;
}

json vector_to_json(const EntVector& v)
{
    json record;
    record["n"] = v.n();
    json values = json::object();
    auto c = v.values();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) != 0)
            values[subset_key(SubsetMask(i))] = to_string(c[i]);
    }
    record["values"] = std::move(values);
    return record;
}

EntVector vector_from_json(const json& record)
{
    const int n = ground_size_from_json(record);
    EntVector v(n);
    if (!record.contains("values") || !record["values"].is_object())
        throw std::invalid_argument("record lacks a \"values\" object");
    for (const auto& [key, value] : record["values"].items()) {
        const Rational c = rational_from_json(value);
        if (key.empty()) {
            if (sgn(c) != 0)
                throw std::invalid_argument("value on the empty set must be 0");
            continue;
        }
        v.set(coordinate_from_key(key, n), c);
    }
    return v;
}

json certificate_to_json(const Certificate& cert)
{
    json record;
    json ineq = json::object();
    for (const auto& [i, y] : cert.ineq_multipliers)
        ineq[std::to_string(i)] = to_string(y);
    json eq = json::object();
    for (const auto& [j, z] : cert.eq_multipliers)
        eq[std::to_string(j)] = to_string(z);
    record["ineq_multipliers"] = std::move(ineq);
    record["eq_multipliers"] = std::move(eq);
    record["target"] = form_to_json(cert.target);
    return record;
}

Certificate certificate_from_json(const json& record)
{
    Certificate cert;
    auto read = [](const json& obj, std::map<std::size_t, Rational>& into) {
        for (const auto& [key, value] : obj.items())
            into.emplace(std::stoul(key), rational_from_json(value));
    };
    if (record.contains("ineq_multipliers"))
        read(record["ineq_multipliers"], cert.ineq_multipliers);
    if (record.contains("eq_multipliers"))
        read(record["eq_multipliers"], cert.eq_multipliers);
    cert.target = form_from_json(record.at("target"));
    return cert;
}

std::vector<LinForm> parse_forms(std::string_view text)
{
    std::vector<LinForm> out;
    for (const auto& r : split_records(text))
        out.push_back(form_from_json(r));
    return out;
}

std::vector<EntVector> parse_vectors(std::string_view text)
{
    std::vector<EntVector> out;
    for (const auto& r : split_records(text))
        out.push_back(vector_from_json(r));
    return out;
}

std::string format_forms(std::span<const LinForm> forms)
{
    std::string out;
    for (const auto& f : forms) {
        out += form_to_json(f).dump();
        out += '\n';
    }
    return out;
}

std::string format_vectors(std::span<const EntVector> vectors)
{
    std::string out;
    for (const auto& v : vectors) {
        out += vector_to_json(v).dump();
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::vector<LinForm> read_forms_file(const std::filesystem::path& path)
{
    return parse_forms(read_text_file(path));
}

std::vector<EntVector> read_vectors_file(const std::filesystem::path& path)
{
    return parse_vectors(read_text_file(path));
}

Cone read_cone_file(const std::filesystem::path& path)
{
    std::vector<LinForm> forms = read_forms_file(path);
    if (forms.empty())
        throw std::invalid_argument("cone file " + path.string() + " is empty");
    Cone cone(forms.front().n());
    for (auto& f : forms) {
        if (f.n() != cone.n)
            throw std::invalid_argument("cone file mixes ground-set sizes");
        if (f.relation() == Relation::ge)
            cone.add_inequality(std::move(f));
        else
            cone.add_equality(std::move(f));
    }
    return cone;
}

std::string format_cone(const Cone& cone)
{
    std::string out = format_forms(cone.ineqs);
    out += format_forms(cone.eqs);
    return out;
}

Scenario parse_scenario(const json& record, const std::filesystem::path& base_dir)
{
    Scenario s;
    s.m = record.at("m").get<int>();
    check_ground_size(s.m);
    int next = s.m + 1;
    auto read_set = [](const json& list) {
        std::vector<int> vars;
        for (const auto& v : list)
            vars.push_back(v.get<int>());
        return SubsetMask::of(vars);
    };
    if (record.contains("steps")) {
        for (const auto& step : record["steps"]) {
            CopyStep c;
            c.k = step.at("k").get<int>();
            c.copied_over = step.contains("I") ? read_set(step["I"]) : SubsetMask();
            c.kept_apart = step.contains("J") ? read_set(step["J"]) : SubsetMask();
            c.new_var = next++;
            s.steps.push_back(c);
        }
    }
    if (record.contains("substituted"))
        s.substituted = record["substituted"].get<bool>();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_relative() ? base_dir / path : path;
    };
    if (record.contains("base_bound") && !record["base_bound"].is_null()) {
        for (auto& f : read_forms_file(resolve(record["base_bound"].get<std::string>()))) {
            if (f.n() != s.m)
                throw std::invalid_argument("base bound forms must be over m variables");
            s.base_bound.push_back(std::move(f));
        }
    }
    if (record.contains("extra_equalities") && !record["extra_equalities"].is_null()) {
        const std::string text =
            read_text_file(resolve(record["extra_equalities"].get<std::string>()));
        s.extra_equalities = mmrv_equalities(text, s.n());
    }
    s.validate();
    return s;
}

Scenario read_scenario_file(const std::filesystem::path& path)
{
    const json record = json::parse(read_text_file(path));
    return parse_scenario(record, path.parent_path());
}

json scenario_to_json(const Scenario& scenario)
{
    json record;
    record["m"] = scenario.m;
    json steps = json::array();
    for (const auto& step : scenario.steps) {
        json s;
        s["k"] = step.k;
        s["I"] = step.copied_over.variables();
        s["J"] = step.kept_apart.variables();
        steps.push_back(std::move(s));
    }
    record["steps"] = std::move(steps);
    record["substituted"] = scenario.substituted;
    return record;
}

std::string pretty(const LinForm& f)
{
    std::string out;
    auto c = f.coeffs();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) == 0)
            continue;
        const bool negative = sgn(c[i]) < 0;
        const Rational magnitude = abs(c[i]);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (magnitude != 1)
            out += to_string(magnitude) + " ";
        out += "H(" + subset_key(SubsetMask(i)) + ")";
    }
    if (out.empty())
        out = "0";
    out += f.relation() == Relation::ge ? " >= 0" : " = 0";
    return out;
}

}  // namespace entcone
