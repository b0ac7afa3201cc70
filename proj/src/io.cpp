#include "dcsp/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace dcsp {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

int parse_int(const std::string& tok, const std::string& context) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer in " + context + ", got '" + tok + "'");
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    Instance inst;
    bool have_domain = false;
    std::map<std::string, int> relation_index;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto where = [&lineno]() { return "line " + std::to_string(lineno); };

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok[0] == "domain") {
            if (tok.size() != 2) throw ParseError(where() + ": domain takes one argument");
            inst.domain_size = parse_int(tok[1], where());
            have_domain = true;
        } else if (tok[0] == "variables") {
            if (tok.size() != 2) throw ParseError(where() + ": variables takes one argument");
            inst.num_variables = std::max(inst.num_variables, parse_int(tok[1], where()));
        } else if (tok[0] == "relation") {
            if (tok.size() != 3) throw ParseError(where() + ": relation takes name and arity");
            Relation r;
            r.id = tok[1];
            r.arity = parse_int(tok[2], where());
            bool closed = false;
            while (std::getline(in, line)) {
                ++lineno;
                std::vector<std::string> row = tokenize(line);
                if (row.empty()) continue;
                if (row[0] == "end") {
                    closed = true;
                    break;
                }
                if (static_cast<int>(row.size()) != r.arity)
                    throw ParseError(where() + ": tuple length != arity of " + r.id);
                Tuple t;
                for (const std::string& v : row) t.push_back(parse_int(v, where()));
                r.tuples.push_back(std::move(t));
            }
            if (!closed) throw ParseError("relation " + r.id + " not terminated by 'end'");
            r.normalize();
            if (relation_index.count(r.id))
                throw ParseError("duplicate relation " + r.id);
            relation_index[r.id] = static_cast<int>(inst.relations.size());
            inst.relations.push_back(std::move(r));
        } else if (tok[0] == "constraint") {
            if (tok.size() < 2) throw ParseError(where() + ": constraint needs a relation name");
            auto it = relation_index.find(tok[1]);
            if (it == relation_index.end())
                throw ParseError(where() + ": unknown relation " + tok[1]);
            Constraint c;
            c.relation = it->second;
            for (size_t i = 2; i < tok.size(); ++i) {
                int v = parse_int(tok[i], where());
                c.scope.push_back(v);
                inst.num_variables = std::max(inst.num_variables, v + 1);
            }
            inst.constraints.push_back(std::move(c));
        } else {
            throw ParseError(where() + ": unknown directive '" + tok[0] + "'");
        }
    }
    if (!have_domain) throw ParseError("missing 'domain' header");
    try {
        inst.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return inst;
}

std::string print_instance(const Instance& instance) {
    std::ostringstream out;
    out << "domain " << instance.domain_size << "\n";
    out << "variables " << instance.num_variables << "\n";
    for (const Relation& r : instance.relations) {
        out << "relation " << r.id << " " << r.arity << "\n";
        for (const Tuple& t : r.tuples) {
            for (size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
            out << "\n";
        }
        out << "end\n";
    }
    for (const Constraint& c : instance.constraints) {
        out << "constraint " << instance.relations[c.relation].id;
        for (int v : c.scope) out << " " << v;
        out << "\n";
    }
    return out.str();
}

Instance parse_instance_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what());
    }
    Instance inst;
    try {
        inst.domain_size = j.at("domain").get<int>();
        inst.num_variables = j.value("variables", 0);
        std::map<std::string, int> relation_index;
        for (const auto& jr : j.value("relations", nlohmann::json::array())) {
            Relation r;
            r.id = jr.at("name").get<std::string>();
            r.arity = jr.at("arity").get<int>();
            for (const auto& jt : jr.at("tuples")) r.tuples.push_back(jt.get<Tuple>());
            r.normalize();
            if (relation_index.count(r.id)) throw ParseError("duplicate relation " + r.id);
            relation_index[r.id] = static_cast<int>(inst.relations.size());
            inst.relations.push_back(std::move(r));
        }
        for (const auto& jc : j.value("constraints", nlohmann::json::array())) {
            Constraint c;
            std::string name = jc.at("relation").get<std::string>();
            auto it = relation_index.find(name);
            if (it == relation_index.end()) throw ParseError("unknown relation " + name);
            c.relation = it->second;
            c.scope = jc.at("scope").get<std::vector<int>>();
            for (int v : c.scope) inst.num_variables = std::max(inst.num_variables, v + 1);
            inst.constraints.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad instance json: ") + e.what());
    }
    try {
        inst.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return inst;
}

std::string print_instance_json(const Instance& instance) {
    nlohmann::json j;
    j["domain"] = instance.domain_size;
    j["variables"] = instance.num_variables;
    j["relations"] = nlohmann::json::array();
    for (const Relation& r : instance.relations)
        j["relations"].push_back({{"name", r.id}, {"arity", r.arity}, {"tuples", r.tuples}});
    j["constraints"] = nlohmann::json::array();
    for (const Constraint& c : instance.constraints)
        j["constraints"].push_back(
            {{"relation", instance.relations[c.relation].id}, {"scope", c.scope}});
    return j.dump(2) + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
    std::string text = read_file(path);
    return path.extension() == ".json" ? parse_instance_json(text) : parse_instance(text);
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    write_file(path, path.extension() == ".json" ? print_instance_json(instance)
                                                 : print_instance(instance));
}

ConstraintLanguage parse_language(const std::string& text) {
    Instance inst = parse_instance(text);
    if (!inst.constraints.empty())
        throw ParseError("language file must not contain constraints");
    return ConstraintLanguage{inst.domain_size, inst.relations};
}

std::string print_language(const ConstraintLanguage& gamma) {
    Instance shell;
    shell.domain_size = gamma.domain_size;
    shell.relations = gamma.relations;
    return print_instance(shell);
}

ConstraintLanguage load_language(const std::filesystem::path& path) {
    return parse_language(read_file(path));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << content;
}

}  // namespace dcsp
