#include <magiclab/drg.hh>
#include <magiclab/generators.hh>
#include <magiclab/linalg.hh>

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace magiclab
{
    ArrayParseError::ArrayParseError(const string & message, int line) :
        std::runtime_error("line " + to_string(line) + ": " + message),
        _line(line)
    {
    }

    auto vertex_count(const IntersectionArray & arr) -> long long
    {
        arr.validate();
        BigInt k = 1, total = 1;
        for (int i = 1; i <= arr.diameter(); ++i) {
            BigInt numerator = k * arr.b_at(i - 1);
            if (numerator % arr.c_at(i) != 0)
                throw std::invalid_argument("k_" + to_string(i) + " is not an integer for " + arr.to_string());
            k = numerator / arr.c_at(i);
            total += k;
        }
        if (total > BigInt(std::numeric_limits<long long>::max()))
            throw std::invalid_argument("order overflows for " + arr.to_string());
        return static_cast<long long>(total);
    }

    namespace
    {
        // Some printed tables drop the ';'. With an even number of entries and no ';' the
        // halves are unambiguous.
        auto split_if_unseparated(const string & line) -> string
        {
            if (line.find(';') != string::npos)
                return line;
            auto commas = std::count(line.begin(), line.end(), ',');
            if (commas % 2 == 0)
                return line;
            auto half = (commas + 1) / 2;
            string result = line;
            std::size_t pos = 0;
            for (long i = 0; i < half; ++i)
                pos = result.find(',', pos) + 1;
            result[pos - 1] = ';';
            return result;
        }
    }

    auto parse_array_file(const string & text) -> vector<ArrayRecord>
    {
        vector<ArrayRecord> records;
        std::istringstream in(text);
        string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (auto hash = line.find('#'); hash != string::npos)
                line.erase(hash);
            if (line.find_first_not_of(" \t\r") == string::npos)
                continue;
            try {
                ArrayRecord rec;
                rec.array = IntersectionArray::parse(split_if_unseparated(line));
                rec.order = vertex_count(rec.array);
                rec.line = number;
                records.push_back(std::move(rec));
            }
            catch (const std::invalid_argument & e) {
                throw ArrayParseError(e.what(), number);
            }
        }
        return records;
    }

    auto diam3_magic_filter(const vector<ArrayRecord> & records) -> FilterReport
    {
        FilterReport report;
        for (auto & rec : records) {
            auto & arr = rec.array;
            if (arr.diameter() != 3)
                throw std::invalid_argument("line " + to_string(rec.line) + ": diameter " + to_string(arr.diameter())
                    + " array given to the diameter-3 filter");
            FilterRow row;
            row.record = rec;
            long long r = arr.degree(), b2 = arr.b_at(2), c2 = arr.c_at(2), c3 = arr.c_at(3);
            row.even_degree = r % 2 == 0;
            // Antipodal and bipartite diameter-3 graphs both have c_3 = r.
            row.primitive = c3 != r;
            row.determinant = (r - b2 - c2) * (r - c3) == b2 * c3;
            if (row.survives())
                report.surviving.push_back(rec);
            report.rows.push_back(std::move(row));
        }
        return report;
    }

    namespace
    {
        struct KnownGraph
        {
            string family;
            string name;
            IntersectionArray array;
            long long order;
        };

        auto known_diameter3() -> const vector<KnownGraph> &
        {
            static const vector<KnownGraph> catalogue = [] {
                vector<KnownGraph> result;
                auto add = [&](const string & family, const string & name) {
                    auto g = generate(family);
                    if (auto arr = intersection_array(g); arr && arr->diameter() == 3)
                        result.push_back({family, name, *arr, g.order()});
                };
                for (int q = 2; q <= 6; ++q)
                    add("hamming:3," + to_string(q), "Hamming graph H(3," + to_string(q) + ")");
                for (int v = 6; v <= 10; ++v)
                    add("johnson:" + to_string(v) + ",3", "Johnson graph J(" + to_string(v) + ",3)");
                add("cycle:6", "cycle C_6");
                add("cycle:7", "cycle C_7");
                return result;
            }();
            return catalogue;
        }
    }

    auto cross_check_known(const vector<ArrayRecord> & records) -> vector<CrossCheckRow>
    {
        vector<CrossCheckRow> rows;
        for (auto & rec : records) {
            CrossCheckRow row;
            row.record = rec;
            for (auto & known : known_diameter3())
                if (known.array == rec.array) {
                    row.family = known.family;
                    row.graph_name = known.name;
                    row.order_agrees = known.order == rec.order;
                    break;
                }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    auto format_table(const vector<CrossCheckRow> & rows) -> string
    {
        vector<string> arrays;
        std::size_t width = string("Intersection array").size();
        for (auto & row : rows) {
            arrays.push_back("{" + row.record.array.to_string() + "}");
            width = std::max(width, arrays.back().size());
        }
        std::ostringstream s;
        s << std::left << std::setw(4) << "No" << "  " << std::setw(static_cast<int>(width)) << "Intersection array"
          << "  " << std::right << std::setw(6) << "Order" << "  " << "Graph" << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            s << std::left << std::setw(4) << i + 1 << "  " << std::setw(static_cast<int>(width)) << arrays[i] << "  "
              << std::right << std::setw(6) << rows[i].record.order << "  " << rows[i].graph_name << "\n";
        return s.str();
    }
}
