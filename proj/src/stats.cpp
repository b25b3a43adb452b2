#include "miml/stats.hpp"

#include <set>
#include <sstream>

namespace miml {

DatasetStats compute_stats(const MIMLDataset& ds)
{
    const Index m = ds.num_bags();
    const Index q = ds.num_labels();
    const Eigen::MatrixXi& y = ds.labels.values;

    DatasetStats s;
    s.num_bags = m;
    s.num_labels = q;
    s.num_attributes = ds.dimension();

    s.bag_size_min = ds.bags.front().size();
    s.bag_size_max = s.bag_size_min;
    double size_sum = 0.0;
    for (const auto& bag : ds.bags) {
        s.bag_size_min = std::min(s.bag_size_min, bag.size());
        s.bag_size_max = std::max(s.bag_size_max, bag.size());
        size_sum += static_cast<double>(bag.size());
    }
    s.bag_size_mean = size_sum / static_cast<double>(m);

    s.cardinality = y.cast<double>().sum() / static_cast<double>(m);
    s.density = s.cardinality / static_cast<double>(q);

    std::set<std::vector<int>> labelsets;
    for (Index i = 0; i < m; ++i) {
        std::vector<int> row(static_cast<std::size_t>(q));
        for (Index l = 0; l < q; ++l)
            row[static_cast<std::size_t>(l)] = y(i, l);
        labelsets.insert(std::move(row));
    }
    s.distinct_labelsets = static_cast<Index>(labelsets.size());

    s.label_frequencies = y.colwise().sum();
    // cooccurrence[a][b] counts bags with both labels set; diagonal = frequency
    s.cooccurrence = y.transpose() * y;

    const int max_freq = s.label_frequencies.maxCoeff();
    s.irlbl.resize(static_cast<std::size_t>(q));
    double ir_sum = 0.0;
    Index ir_count = 0;
    for (Index l = 0; l < q; ++l) {
        const int freq = s.label_frequencies(l);
        if (freq > 0) {
            double ir = static_cast<double>(max_freq) / static_cast<double>(freq);
            s.irlbl[static_cast<std::size_t>(l)] = ir;
            ir_sum += ir;
            ++ir_count;
        }
    }
    s.mean_ir = ir_count > 0 ? ir_sum / static_cast<double>(ir_count) : 1.0;
    return s;
}

std::string format_stats(const DatasetStats& s, const std::vector<std::string>& label_names)
{
    std::ostringstream out;
    out << "num_bags=" << s.num_bags << "\n";
    out << "num_labels=" << s.num_labels << "\n";
    out << "num_attributes=" << s.num_attributes << "\n";
    out << "bag_size_min=" << s.bag_size_min << "\n";
    out << "bag_size_max=" << s.bag_size_max << "\n";
    out << "bag_size_mean=" << s.bag_size_mean << "\n";
    out << "cardinality=" << s.cardinality << "\n";
    out << "density=" << s.density << "\n";
    out << "distinct_labelsets=" << s.distinct_labelsets << "\n";
    for (Index l = 0; l < s.num_labels; ++l)
        out << "label_frequency[" << label_names[static_cast<std::size_t>(l)]
            << "]=" << s.label_frequencies(l) << "\n";
    for (Index a = 0; a < s.num_labels; ++a)
        for (Index b = a + 1; b < s.num_labels; ++b)
            out << "cooccurrence[" << label_names[static_cast<std::size_t>(a)] << ","
                << label_names[static_cast<std::size_t>(b)] << "]=" << s.cooccurrence(a, b)
                << "\n";
    for (Index l = 0; l < s.num_labels; ++l) {
        out << "irlbl[" << label_names[static_cast<std::size_t>(l)] << "]=";
        const auto& ir = s.irlbl[static_cast<std::size_t>(l)];
        if (ir)
            out << *ir;
        else
            out << "absent";
        out << "\n";
    }
    out << "mean_ir=" << s.mean_ir << "\n";
    return out.str();
}

} // namespace miml
