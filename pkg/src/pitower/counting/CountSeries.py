#  Copyright (c) 2024. Affects AI LLC
#
#  Licensed under the Creative Common CC BY-NC-SA 4.0 International License (the "License");
#  you may not use this file except in compliance with the License. The full text of the License is
#  provided in the included LICENSE file. If this file is not available, you may obtain a copy of the
#  License at
#
#       https://creativecommons.org/licenses/by-nc-sa/4.0/deed.en
#
#  Unless required by applicable law or agreed to in writing, software distributed under the License
#  is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
#  express or implied. See the License for the specific language governing permissions and limitations
#  under the License.
import csv
import io
from dataclasses import dataclass, field

from pitower.errors import ParseError


@dataclass
class CountSeries:
    """
    Orders |I_n| of the images of a group mod p^n (or mod w^n, see filtration) for consecutive n.
    """
    p: int
    orders: list = field(default_factory=list)
    filtration: str = 'p'

    def __len__(self):
        return len(self.orders)

    def levels(self):
        return [n for n, _ in self.orders]

    def kernel_indices(self):
        """
        |K_1 / K_n| = |I_n| / |I_1| for every level.
        """
        if not self.orders:
            return []
        first = self.orders[0][1]
        return [(n, order // first) for n, order in self.orders]

    def to_dict(self):
        return {'p': self.p, 'filtration': self.filtration,
                'orders': [[n, str(order)] for n, order in self.orders],
                'kernel_indices': [[n, str(k)] for n, k in self.kernel_indices()]}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(p=int(data['p']), orders=[(int(n), int(o)) for n, o in data['orders']],
                       filtration=data.get('filtration', 'p'))
        except (KeyError, TypeError, ValueError) as ex:
            raise ParseError(f'Malformed count series document: {ex}')

    def to_csv(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(['n', 'order'])
        for n, order in self.orders:
            writer.writerow([n, order])
        return out.getvalue()
